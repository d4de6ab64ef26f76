#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "gmecrit/criteria.hpp"
#include "gmecrit/gpops.hpp"
#include "gmecrit/io.hpp"

namespace py = pybind11;
using namespace gmecrit;

namespace {

const char* kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Hermiticity:
      return "hermiticity";
    case Violation::Kind::Trace:
      return "trace";
    case Violation::Kind::Positivity:
      return "positivity";
  }
  return "unknown";
}

DensityMatrix make_state(const std::vector<int>& dims, const Matrix& matrix) {
  DensityMatrix rho{SystemDims(dims), matrix};
  const long D = rho.dims.total();
  if (rho.matrix.rows() != D || rho.matrix.cols() != D) {
    throw std::invalid_argument("matrix must be " + std::to_string(D) + "x" +
                                std::to_string(D) + " for these dims");
  }
  return rho;
}

py::array_t<Complex> tensor_array(const CorrelationTensor& tensor) {
  std::vector<py::ssize_t> shape(tensor.extents.begin(), tensor.extents.end());
  py::array_t<Complex> arr(shape);
  std::copy(tensor.coeffs.begin(), tensor.coeffs.end(), arr.mutable_data());
  return arr;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Multipartite entanglement detection from Weyl-basis correlation "
      "tensors";

  // ---- operator basis --------------------------------------------------
  m.def("primitive_root", &primitive_root, py::arg("d"),
        "Primitive d-th root of unity.");
  m.def(
      "weyl_op",
      [](int d, int i, int j) { return weyl_op(d, i, j).matrix; },
      py::arg("d"), py::arg("i"), py::arg("j"),
      "Dense matrix of the shift/phase operator with the given exponents.");
  m.def(
      "weyl_basis",
      [](int d) {
        std::vector<Matrix> out;
        for (auto& op : weyl_basis(d)) out.push_back(std::move(op.matrix));
        return out;
      },
      py::arg("d"), "All d^2 basis matrices ordered by flat label.");
  m.def("check_algebra", &check_algebra, py::arg("d"),
        py::arg("tol") = 1e-12,
        "Exhaustively verify the product, adjoint and orthogonality "
        "relations.");

  // ---- states ----------------------------------------------------------
  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init(&make_state), py::arg("dims"), py::arg("matrix"))
      .def_property_readonly(
          "dims", [](const DensityMatrix& s) { return s.dims.dims; })
      .def_property_readonly(
          "matrix", [](const DensityMatrix& s) { return s.matrix; })
      .def("__repr__", [](const DensityMatrix& s) {
        std::string out = "DensityMatrix(dims=[";
        for (std::size_t i = 0; i < s.dims.dims.size(); ++i) {
          out += (i ? ", " : "") + std::to_string(s.dims.dims[i]);
        }
        return out + "])";
      });

  py::class_<Bipartition>(m, "Bipartition")
      .def_readonly("left", &Bipartition::left)
      .def_readonly("right", &Bipartition::right)
      .def_readonly("n", &Bipartition::n)
      .def("label", &Bipartition::label)
      .def("__repr__",
           [](const Bipartition& b) { return "Bipartition(" + b.label() + ")"; });
  m.def("make_bipartition", &make_bipartition, py::arg("left"),
        py::arg("right"));
  m.def("parse_bipartition", &parse_bipartition, py::arg("text"), py::arg("n"),
        "Parse a 1-based split such as '1|23' or '1,4|2,3'.");
  m.def("enumerate_bipartitions", &enumerate_bipartitions, py::arg("n"));

  m.def("w_state", &w_state, "Three-qubit W projector.");
  m.def("ghz_state", &ghz_state, py::arg("n"), py::arg("d"),
        "GHZ projector on n parties of dimension d.");
  m.def("white_noise_mix", &white_noise_mix, py::arg("rho"), py::arg("x"),
        "x * rho + (1 - x) * I / D.");
  m.def("product_state", &product_state, py::arg("left"), py::arg("right"),
        py::arg("split"),
        "Tensor product with the factors placed on the split's parties.");
  m.def(
      "random_density",
      [](const std::vector<int>& dims, long rank, std::uint64_t seed) {
        return random_density(SystemDims(dims), rank, seed);
      },
      py::arg("dims"), py::arg("rank"), py::arg("seed"),
      "Seeded random state of the given rank.");
  m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("keep"),
        "Reduced state on the listed parties.");
  m.def(
      "validate",
      [](const DensityMatrix& rho, double tol) {
        py::list out;
        for (const auto& v : validate(rho, tol)) {
          py::dict entry;
          entry["kind"] = kind_name(v.kind);
          entry["magnitude"] = v.magnitude;
          entry["detail"] = v.detail;
          out.append(std::move(entry));
        }
        return out;
      },
      py::arg("rho"), py::arg("tol") = 1e-8,
      "List of violated state invariants; empty when rho is a valid state.");
  m.def("is_permutation_invariant", &is_permutation_invariant, py::arg("rho"),
        py::arg("tol") = 1e-8);

  // ---- correlation tensor ----------------------------------------------
  py::class_<CorrelationTensor>(m, "CorrelationTensor")
      .def_property_readonly(
          "dims", [](const CorrelationTensor& t) { return t.dims.dims; })
      .def_readonly("extents", &CorrelationTensor::extents)
      .def_property_readonly("array", &tensor_array,
                             "Coefficients as a complex ndarray indexed by "
                             "per-party flat labels.")
      .def(
          "at",
          [](const CorrelationTensor& t, const std::vector<int>& mu) {
            return t.at(mu);
          },
          py::arg("mu"));

  m.def("extract_tensor", &extract_tensor, py::arg("rho"),
        "Expand a state over the product Weyl basis.");
  m.def("reconstruct", &reconstruct, py::arg("tensor"),
        "Rebuild the density matrix from its coefficients.");
  m.def(
      "t_vector",
      [](const CorrelationTensor& t, const std::vector<int>& part) {
        return t_vector(t, part);
      },
      py::arg("tensor"), py::arg("part"));
  m.def("s_matrix", &s_matrix, py::arg("tensor"), py::arg("left"),
        py::arg("right"));

  py::class_<FMatrix>(m, "FMatrix")
      .def_readonly("split", &FMatrix::split)
      .def_readonly("alpha", &FMatrix::alpha)
      .def_readonly("beta", &FMatrix::beta)
      .def_readonly("matrix", &FMatrix::matrix)
      .def_readonly("top_cols", &FMatrix::top_cols);
  m.def("f_matrix", &f_matrix, py::arg("tensor"), py::arg("split"),
        py::arg("alpha"), py::arg("beta"));

  // ---- criteria --------------------------------------------------------
  m.def("trace_norm", &trace_norm, py::arg("matrix"),
        "Sum of singular values.");
  m.def(
      "vector_norm_bound",
      [](const std::vector<int>& dims, const std::vector<int>& parties) {
        return vector_norm_bound(SystemDims(dims), parties);
      },
      py::arg("dims"), py::arg("parties"),
      "Product-state ceiling for the correlation vector on these parties.");
  m.def(
      "threshold_w",
      [](const Bipartition& split, const std::vector<int>& dims, double alpha,
         double beta) {
        return threshold_w(split, SystemDims(dims),
                           CriterionParams{alpha, beta});
      },
      py::arg("split"), py::arg("dims"), py::arg("alpha") = 1.0,
      py::arg("beta") = 1.0);

  py::class_<BipartitionRecord>(m, "BipartitionRecord")
      .def_readonly("split", &BipartitionRecord::split)
      .def_readonly("norm", &BipartitionRecord::norm)
      .def_readonly("threshold", &BipartitionRecord::threshold)
      .def_readonly("excluded", &BipartitionRecord::excluded)
      .def("__repr__", [](const BipartitionRecord& rec) {
        return "BipartitionRecord(" + rec.split.label() + ", norm=" +
               std::to_string(rec.norm) + ", threshold=" +
               std::to_string(rec.threshold) + ")";
      });
  m.def(
      "bipartition_check",
      [](const CorrelationTensor& tensor, const Bipartition& split,
         double alpha, double beta) {
        return bipartition_check(tensor, split, CriterionParams{alpha, beta});
      },
      py::arg("tensor"), py::arg("split"), py::arg("alpha") = 1.0,
      py::arg("beta") = 1.0);
  m.def(
      "aggregate_t",
      [](const CorrelationTensor& tensor, double alpha, double beta) {
        return aggregate_t(tensor, CriterionParams{alpha, beta});
      },
      py::arg("tensor"), py::arg("alpha") = 1.0, py::arg("beta") = 1.0,
      "Mean stacked-unfolding trace norm over all bipartitions.");
  m.def(
      "k_threshold",
      [](const std::vector<int>& dims, double alpha, double beta) {
        return k_threshold(SystemDims(dims), CriterionParams{alpha, beta});
      },
      py::arg("dims"), py::arg("alpha") = 1.0, py::arg("beta") = 1.0);
  m.def(
      "j_threshold",
      [](const std::vector<int>& dims, double alpha, double beta) {
        return j_threshold(SystemDims(dims), CriterionParams{alpha, beta});
      },
      py::arg("dims"), py::arg("alpha") = 1.0, py::arg("beta") = 1.0);

  py::class_<CriterionReport>(m, "CriterionReport")
      .def_property_readonly(
          "dims", [](const CriterionReport& r) { return r.dims.dims; })
      .def_property_readonly(
          "alpha", [](const CriterionReport& r) { return r.params.alpha; })
      .def_property_readonly(
          "beta", [](const CriterionReport& r) { return r.params.beta; })
      .def_readonly("records", &CriterionReport::records)
      .def_readonly("T", &CriterionReport::T)
      .def_readonly("K", &CriterionReport::K)
      .def_readonly("J", &CriterionReport::J)
      .def_readonly("gme_detected", &CriterionReport::gme_detected)
      .def_readonly("gme_detected_pi", &CriterionReport::gme_detected_pi)
      .def("excluded_labels", &CriterionReport::excluded_labels)
      .def("__repr__", [](const CriterionReport& r) {
        return std::string("CriterionReport(gme_detected=") +
               (r.gme_detected ? "True" : "False") + ")";
      });
  m.def(
      "detect",
      [](const DensityMatrix& rho, double alpha, double beta, bool use_pi) {
        return detect(rho, CriterionParams{alpha, beta}, use_pi);
      },
      py::arg("rho"), py::arg("alpha") = 1.0, py::arg("beta") = 1.0,
      py::arg("use_pi") = false,
      "Full criterion: per-bipartition checks plus the aggregate test.");

  // ---- file interchange ------------------------------------------------
  m.def("load_state", &load_state_file, py::arg("path"), py::arg("tol") = 1e-8,
        "Read and validate a JSON state file.");
  m.def("save_state", &save_state_file, py::arg("rho"), py::arg("path"),
        "Write a state as a JSON file.");
}
