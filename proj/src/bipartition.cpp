#include "gmecrit/bipartition.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmecrit {

namespace {

std::string side_label(const std::vector<int>& parties, bool commas) {
  std::string out;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(parties[i] + 1);
  }
  return out;
}

std::vector<int> parse_side(const std::string& text, int n) {
  std::vector<int> parties;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = text.find(',', pos);
      const std::string tok =
          text.substr(pos, next == std::string::npos ? next : next - pos);
      if (tok.empty() ||
          tok.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument(
            "bipartition: party labels must be digits, got '" + text + "'");
      }
      parties.push_back(std::stoi(tok) - 1);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument(
            "bipartition: party labels must be digits, got '" + text + "'");
      }
      parties.push_back(c - '0' - 1);
    }
  }
  for (int p : parties) {
    if (p < 0 || p >= n) {
      throw std::invalid_argument("bipartition: party label out of range in '" +
                                  text + "' for " + std::to_string(n) +
                                  " parties");
    }
  }
  return parties;
}

}  // namespace

std::string Bipartition::label() const {
  const bool commas = n > 9;
  return side_label(left, commas) + "|" + side_label(right, commas);
}

Bipartition make_bipartition(std::vector<int> left, std::vector<int> right) {
  if (left.empty() || right.empty()) {
    throw std::invalid_argument("bipartition: both sides must be non-empty");
  }
  const int n = static_cast<int>(left.size() + right.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto* side : {&left, &right}) {
    for (int p : *side) {
      if (p < 0 || p >= n) {
        throw std::invalid_argument("bipartition: party " + std::to_string(p) +
                                    " out of range for " + std::to_string(n) +
                                    " parties");
      }
      if (seen[static_cast<std::size_t>(p)]++) {
        throw std::invalid_argument("bipartition: party " + std::to_string(p) +
                                    " listed twice");
      }
    }
  }
  if (2 * static_cast<int>(left.size()) > n) {
    throw std::invalid_argument(
        "bipartition: left side may hold at most half the parties");
  }
  Bipartition bp;
  bp.left = std::move(left);
  bp.right = std::move(right);
  bp.n = n;
  return bp;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 3) {
    throw std::invalid_argument(
        "bipartition enumeration needs at least 3 parties, got " +
        std::to_string(n));
  }
  std::vector<Bipartition> out;
  for (int s = 1; 2 * s <= n; ++s) {
    // Lexicographic walk over all s-subsets of {0, ..., n-1}.
    std::vector<int> subset(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<int> right;
      right.reserve(static_cast<std::size_t>(n - s));
      for (int p = 0; p < n; ++p) {
        if (!std::binary_search(subset.begin(), subset.end(), p)) {
          right.push_back(p);
        }
      }
      out.push_back(make_bipartition(subset, std::move(right)));
      int i = s - 1;
      while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - s + i) --i;
      if (i < 0) break;
      ++subset[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < s; ++k) {
        subset[static_cast<std::size_t>(k)] =
            subset[static_cast<std::size_t>(k - 1)] + 1;
      }
    }
  }
  return out;
}

Bipartition parse_bipartition(const std::string& text, int n) {
  const std::size_t bar = text.find('|');
  if (bar == std::string::npos) {
    throw std::invalid_argument("bipartition: expected 'left|right', got '" +
                                text + "'");
  }
  auto left = parse_side(text.substr(0, bar), n);
  auto right = parse_side(text.substr(bar + 1), n);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  auto bp = make_bipartition(std::move(left), std::move(right));
  if (bp.n != n) {
    throw std::invalid_argument("bipartition '" + text + "' does not cover " +
                                std::to_string(n) + " parties");
  }
  return bp;
}

}  // namespace gmecrit
