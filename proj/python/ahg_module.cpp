// Python bindings: thin, string-based wrappers over the library's main
// operations.  Exact values cross the boundary as fraction strings; matrices
// and exponent vectors as nested lists of ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "ahg/basis.hpp"
#include "ahg/commands.hpp"
#include "ahg/errors.hpp"
#include "ahg/fiber.hpp"
#include "ahg/hgm.hpp"
#include "ahg/oracle.hpp"
#include "ahg/problem.hpp"
#include "ahg/recurrence.hpp"
#include "ahg/toric.hpp"

namespace py = pybind11;
using namespace ahg;

namespace {

ConfigMatrix to_matrix(const std::vector<std::vector<long>>& rows) {
  return ConfigMatrix::from_rows(rows);
}

std::vector<Rat> to_rats(const std::vector<std::string>& xs) {
  std::vector<Rat> out;
  out.reserve(xs.size());
  for (const std::string& s : xs) out.push_back(Rat::from_string(s));
  return out;
}

std::vector<ExpVec> to_exps(const std::vector<std::vector<int>>& S) {
  std::vector<ExpVec> out;
  out.reserve(S.size());
  for (const auto& s : S) out.push_back(ExpVec(s.begin(), s.end()));
  return out;
}

std::string label_of(const ExpVec& e) {
  return is_zero_exp(e) ? "1" : monomial_string(e, "d");
}

}  // namespace

PYBIND11_MODULE(_ahg, m) {
  m.doc() =
      "Exact evaluation of A-hypergeometric polynomials and their derivatives "
      "via contiguity recurrences, with a direct-enumeration oracle.";

  py::register_exception<Error>(m, "AhgError");

  m.def(
      "toric",
      [](const std::vector<std::vector<long>>& A, const std::string& order) {
        ConfigMatrix M = to_matrix(A);
        TermOrder ord = TermOrder::named(order, M.n);
        GroebnerBasis G = toric_gb(M, ord);
        std::vector<std::string> out;
        for (const Poly& g : G.gens) out.push_back(g.to_string(ord, "d"));
        return out;
      },
      py::arg("A"), py::arg("order") = "grevlex",
      "Reduced Groebner basis of the binomial ideal of A, as strings.");

  m.def(
      "fiber",
      [](const std::vector<std::vector<long>>& A, const std::vector<long>& beta) {
        return enumerate_fiber(to_matrix(A), beta);
      },
      py::arg("A"), py::arg("beta"),
      "All nonnegative integer solutions of A u = beta.");

  m.def(
      "z_value",
      [](const std::vector<std::vector<long>>& A, const std::vector<long>& beta,
         const std::vector<std::string>& X) {
        return fiber_sum(to_matrix(A), beta, to_rats(X)).to_string();
      },
      py::arg("A"), py::arg("beta"), py::arg("X"),
      "Z(beta; X) = sum over the fiber of X^u/u!, as an exact fraction string.");

  m.def(
      "oracle",
      [](const std::vector<std::vector<long>>& A, const std::vector<std::vector<int>>& S,
         const std::vector<long>& beta, const std::vector<std::string>& X) {
        StateVector Y = oracle_vector(to_matrix(A), to_exps(S), beta, to_rats(X));
        std::vector<std::string> out;
        for (const Rat& v : Y.y) out.push_back(v.to_string());
        return out;
      },
      py::arg("A"), py::arg("S"), py::arg("beta"), py::arg("X"),
      "Ground-truth state vector (s applied to Z for each basis monomial s), "
      "by direct enumeration.");

  m.def(
      "recurrence_matrix",
      [](const std::vector<std::vector<long>>& A, const std::vector<std::vector<int>>& S,
         const std::vector<long>& beta, const std::vector<std::string>& X,
         const std::vector<long>& H) {
        RecurrenceMatrix R =
            extract_recurrence(to_matrix(A), to_exps(S), beta, to_rats(X), H);
        std::vector<std::vector<std::string>> out(R.R.rows);
        for (std::size_t i = 0; i < R.R.rows; ++i)
          for (std::size_t j = 0; j < R.R.cols; ++j)
            out[i].push_back(R.R.at(i, j).to_string());
        return out;
      },
      py::arg("A"), py::arg("S"), py::arg("beta"), py::arg("X"), py::arg("H"),
      "Step matrix over Q(k) along direction H: state at beta+(k-1)H equals "
      "the matrix at k applied to the state at beta+kH.");

  m.def(
      "discover_basis",
      [](const std::vector<std::vector<long>>& A, const std::vector<long>& beta,
         const std::vector<std::string>& X, const std::vector<long>& H) {
        ConfigMatrix M = to_matrix(A);
        GroebnerBasis G = toric_gb(M, TermOrder::grevlex(M.n));
        return discover_basis(M, G, beta, to_rats(X), H);
      },
      py::arg("A"), py::arg("beta"), py::arg("X"), py::arg("H"),
      "Standard-monomial state basis for the parameter line beta + k*H.");

  m.def(
      "evaluate",
      [](const std::string& problem_json) {
        Problem p = parse_problem(problem_json);
        StateVector Y = hgm_eval(p.A, p.plan());
        py::dict out;
        out["beta"] = Y.beta;
        py::list labels, values;
        for (std::size_t l = 0; l < Y.S.size(); ++l) {
          labels.append(label_of(Y.S[l]));
          values.append(Y.y[l].to_string());
        }
        out["labels"] = labels;
        out["values"] = values;
        py::dict exps;
        for (int i = 0; i < p.A.n; ++i) {
          ExpVec ei = unit_exp(p.A.n, i);
          for (const ExpVec& s : p.S)
            if (s == ei) exps[py::int_(i + 1)] = expectation(p.A, Y, i).to_string();
        }
        out["expectations"] = exps;
        return out;
      },
      py::arg("problem_json"),
      "Walk the problem's plan and return the endpoint state plus the "
      "expectations E[U_i] for the columns present in the basis.");

  m.def(
      "run",
      [](const std::string& command, const std::string& problem_json, int T,
         const std::string& order, bool verify_oracle, int decimal_digits, int threads,
         const std::vector<long>& k) {
        Problem p = parse_problem(problem_json);
        CliOptions opt;
        opt.T = T;
        opt.order = order;
        opt.verify_oracle = verify_oracle;
        opt.decimal_digits = decimal_digits;
        opt.threads = threads;
        opt.k_list = k;
        std::ostringstream out, err;
        int rc = run_command(command, p, opt, out, err);
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("command"), py::arg("problem_json"), py::arg("T") = -1,
      py::arg("order") = "", py::arg("verify_oracle") = false,
      py::arg("decimal_digits") = 6, py::arg("threads") = 1,
      py::arg("k") = std::vector<long>{},
      "Run a CLI command (toric|macaulay|recurrence|eval|enumerate|path|bench) "
      "against a problem document; returns (exit_code, stdout, stderr).");
}
