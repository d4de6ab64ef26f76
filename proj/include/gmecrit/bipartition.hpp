#pragma once

#include <string>
#include <vector>

namespace gmecrit {

// Ordered split of the parties {0, ..., n-1} into a smaller "left" group and
// its complement.  right.front() is the distinguished party whose correlations
// fill the top block of the stacked unfolding matrix.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
  int n = 0;

  int distinguished() const { return right.front(); }

  // 1-based text form, e.g. "14|23"; parties are comma separated once any
  // label needs more than one digit.
  std::string label() const;
};

// Validates and assembles a bipartition: both sides non-empty, disjoint,
// jointly covering {0, ..., n-1}, with the left side no larger than n/2.
Bipartition make_bipartition(std::vector<int> left, std::vector<int> right);

// All bipartitions with |left| = 1 .. floor(n/2), left subsets in
// lexicographic order, both members of a complementary pair included when
// n is even.  Requires n >= 3.
std::vector<Bipartition> enumerate_bipartitions(int n);

// Parses the 1-based text form produced by label() (with or without commas)
// and canonicalizes both sides to ascending order.
Bipartition parse_bipartition(const std::string& text, int n);

}  // namespace gmecrit
