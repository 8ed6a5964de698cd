#include "ahg/commands.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "ahg/errors.hpp"
#include "ahg/fiber.hpp"
#include "ahg/hgm.hpp"
#include "ahg/macaulay.hpp"
#include "ahg/matrix.hpp"
#include "ahg/oracle.hpp"
#include "ahg/recurrence.hpp"
#include "ahg/toric.hpp"

namespace ahg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

TermOrder effective_order(const Problem& p, const CliOptions& opt) {
  if (opt.order.empty()) return p.order;
  return TermOrder::named(opt.order, p.A.n);
}

// Column label in the compact header style: "1" for the empty monomial,
// otherwise one "d<i>" factor per unit of exponent ("d1d1" for the square).
std::string tsv_label(const ExpVec& e) {
  if (is_zero_exp(e)) return "1";
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (long r = 0; r < e[i]; ++r) out += "d" + std::to_string(i + 1);
  return out;
}

std::string fraction_with_decimal(const Rat& v, int digits) {
  return v.to_string() + " (" + decimal_string(v, digits) + ")";
}

// The plan's total displacement made primitive: direction D and the number g
// of unit plans that tile the original plan (g = 1 when the leg steps do not
// share the displacement's gcd).
struct UnitPlan {
  std::vector<long> D;          // displacement of one unit plan
  std::vector<Leg> legs;        // the unit plan itself
  long repeats = 1;             // original plan = `repeats` unit plans
};

UnitPlan unit_plan(const Problem& p) {
  UnitPlan u;
  u.D.assign(p.beta.size(), 0);
  for (const Leg& leg : p.legs)
    for (std::size_t j = 0; j < u.D.size(); ++j) u.D[j] += leg.m * leg.H[j];
  long g = 0;
  for (long v : u.D) g = std::gcd(g, v);
  if (g > 1)
    for (const Leg& leg : p.legs)
      if (leg.m % g != 0) { g = 1; break; }
  if (g <= 1) g = 1;
  for (std::size_t j = 0; j < u.D.size(); ++j) u.D[j] /= g;
  for (const Leg& leg : p.legs)
    if (leg.m / g > 0) u.legs.push_back(Leg{leg.H, leg.m / g});
  u.repeats = g;
  return u;
}

std::vector<long> scaled_add(const std::vector<long>& a, long c, const std::vector<long>& b) {
  std::vector<long> out = a;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * b[j];
  return out;
}

}  // namespace

int cmd_toric(const Problem& p, const CliOptions& opt, std::ostream& out) {
  TermOrder ord = effective_order(p, opt);
  GroebnerBasis G = toric_gb(p.A, ord);
  if (G.empty()) {
    out << "(empty ideal)\n";
    return 0;
  }
  for (const Poly& g : G.gens) out << g.to_string(ord, "d") << "\n";
  return 0;
}

int cmd_macaulay(const Problem& p, const CliOptions& opt, std::ostream& out) {
  TermOrder ord = effective_order(p, opt);
  GroebnerBasis G = toric_gb(p.A, ord);
  int T = opt.T >= 0 ? opt.T : 1;
  MacaulayMatrix F = build_macaulay(p.A, G, p.S, T);
  std::vector<ExpVec> cols = F.columns();
  for (std::size_t c = 0; c < cols.size(); ++c)
    out << (c ? "\t" : "") << tsv_label(cols[c]);
  out << "\n";
  // With a walk plan the matrix is restricted to the parameter line
  // c = beta + k*D (D = the plan's primitive displacement) and x = X; without
  // one the symbolic entries are dumped as written.
  const bool specialized = !p.legs.empty();
  std::vector<long> D;
  if (specialized) D = unit_plan(p).D;
  for (const OperatorRow& row : F.rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) out << "\t";
      auto it = row.find(cols[c]);
      if (it == row.end() || it->second.is_zero()) continue;
      if (specialized) {
        UniPoly v = it->second.specialize(p.X, p.beta, D);
        if (!v.is_zero()) out << v.to_string(false);
      } else {
        out << it->second.to_string();
      }
    }
    out << "\n";
  }
  return 0;
}

int cmd_recurrence(const Problem& p, const CliOptions& opt, std::ostream& out) {
  std::vector<long> beta = p.beta;
  for (const Leg& leg : p.legs) {
    RecurrenceMatrix R = [&] {
      if (opt.T < 0) return extract_recurrence(p.A, p.S, beta, p.X, leg.H);
      GroebnerBasis G = toric_gb(p.A, effective_order(p, opt));
      ExpVec h = decompose_direction(p.A, leg.H, p.weights);
      return extract_step(p.A, G, p.S, beta, p.X, leg.H, h, opt.T);
    }();
    out << "[";
    for (std::size_t i = 0; i < R.R.rows; ++i) {
      out << (i ? ",[" : "[");
      for (std::size_t j = 0; j < R.R.cols; ++j)
        out << (j ? "," : "") << "\"" << R.R.at(i, j).to_string() << "\"";
      out << "]";
    }
    out << "]\n";
    beta = scaled_add(beta, leg.m, leg.H);
  }
  return 0;
}

int cmd_eval(const Problem& p, const CliOptions& opt, std::ostream& out) {
  StateVector Y = hgm_eval(p.A, p.plan());
  for (std::size_t l = 0; l < Y.S.size(); ++l)
    out << tsv_label(Y.S[l]) << " = " << fraction_with_decimal(Y.y[l], opt.decimal_digits)
        << "\n";
  for (int i = 0; i < p.A.n; ++i) {
    ExpVec ei = unit_exp(p.A.n, i);
    bool in_basis = false;
    for (const ExpVec& s : p.S)
      if (s == ei) in_basis = true;
    if (!in_basis) continue;
    out << "E[U_" << (i + 1) << "] = "
        << fraction_with_decimal(expectation(p.A, Y, i), opt.decimal_digits) << "\n";
  }
  if (opt.verify_oracle) {
    if (fiber_count(p.A, Y.beta) > 100000) {
      out << "oracle check skipped (fiber exceeds 100000)\n";
    } else {
      StateVector want = oracle_vector(p.A, Y.S, Y.beta, Y.X);
      if (want.y != Y.y)
        throw MethodMismatchError("eval: walk disagrees with enumeration at the endpoint");
      out << "VERIFIED\n";
    }
  }
  return 0;
}

int cmd_enumerate(const Problem& p, const CliOptions& opt, std::ostream& out) {
  out << fiber_count(p.A, p.beta) << " solutions\n";
  Rat Z = fiber_sum(p.A, p.beta, p.X, opt.threads);
  out << "Z = " << fraction_with_decimal(Z, opt.decimal_digits) << "\n";
  return 0;
}

int cmd_path(const Problem& p, const CliOptions& opt, std::ostream& out) {
  (void)opt;
  Path path = find_path(p.A, p.beta, p.S);
  out << "[";
  for (std::size_t s = 0; s < path.steps.size(); ++s)
    out << (s ? "," : "") << "(" << (path.steps[s].column + 1) << ","
        << path.steps[s].mult << ")";
  out << "] -> (";
  for (std::size_t j = 0; j < path.endpoint.size(); ++j)
    out << (j ? "," : "") << path.endpoint[j];
  out << ")\n";
  return 0;
}

int cmd_bench(const Problem& p, const CliOptions& opt, std::ostream& out) {
  if (p.legs.empty()) throw ParseError("legs: bench requires a walk plan");
  std::vector<long> ks = opt.k_list;
  if (ks.empty())
    for (long k = 0; k <= 100; k += 10) ks.push_back(k);
  long kmax = 0;
  for (long k : ks) {
    if (k < 0) throw ParseError("k: shifts must be nonnegative");
    kmax = std::max(kmax, k);
  }

  const UnitPlan unit = unit_plan(p);

  // ---- Recurrence-walk method: build the step-matrix families once, then
  // advance the shift k by matrix application only.  Walking up one unit plan
  // from beta+kD undoes, in reverse, the chain of single contiguity steps that
  // descends from beta+(k+1)D; each descent map is one extract_step family
  // along the fixed direction D, anchored at its own offset within the chain.
  Clock::time_point t0 = Clock::now();
  TermOrder ord = effective_order(p, opt);
  GroebnerBasis G = toric_gb(p.A, ord);
  std::vector<RecurrenceMatrix> chain;
  {
    std::vector<long> prefix(p.beta.size(), 0);
    for (const Leg& leg : unit.legs) {
      ExpVec h = decompose_direction(p.A, leg.H, p.weights);
      std::vector<long> Ah = p.A.apply(h);
      for (long r = 0; r < leg.m; ++r) {
        prefix = scaled_add(prefix, 1, Ah);
        std::vector<long> base = scaled_add(scaled_add(p.beta, 1, prefix), -1, unit.D);
        chain.push_back(extract_step(p.A, G, p.S, base, p.X, unit.D, h,
                                     opt.T >= 0 ? opt.T : 0));
      }
    }
  }
  StateVector seed = oracle_vector(p.A, p.S, p.beta, p.X);
  double construct_seconds = seconds_since(t0);

  std::vector<Rat> y = seed.y;
  std::vector<std::string> walk_values(static_cast<std::size_t>(kmax) + 1);
  std::vector<double> walk_seconds(static_cast<std::size_t>(kmax) + 1, 0.0);
  walk_values[0] = y[0].to_string();
  walk_seconds[0] = construct_seconds;
  double cumulative = construct_seconds;
  for (long k = 1; k <= kmax; ++k) {
    Clock::time_point ts = Clock::now();
    try {
      Matrix<Rat> P = Matrix<Rat>::identity(p.S.size());
      for (const RecurrenceMatrix& M : chain) P = P * eval_recurrence(M, k);
      y = invert(P) * y;
    } catch (const PoleError&) {
      throw SingularStepError(k);
    } catch (const SingularMatrixError&) {
      throw SingularStepError(k);
    }
    cumulative += seconds_since(ts);
    walk_values[static_cast<std::size_t>(k)] = y[0].to_string();
    walk_seconds[static_cast<std::size_t>(k)] = cumulative;
  }

  // ---- Enumeration method, timed per shift on its own.
  out << "method,k,wall_seconds,value,fiber_count\n";
  char buf[32];
  for (long k : ks) {
    std::vector<long> bk = scaled_add(p.beta, k, unit.D);
    Clock::time_point ts = Clock::now();
    std::uint64_t count = fiber_count(p.A, bk);
    Rat val = fiber_sum(p.A, bk, p.X, opt.threads);
    double enum_seconds = seconds_since(ts);
    std::string enum_value = val.to_string();

    const std::string& walk_value = walk_values[static_cast<std::size_t>(k)];
    if (walk_value != enum_value)
      throw MethodMismatchError("bench: methods disagree at k = " + std::to_string(k) +
                                " (" + walk_value + " vs " + enum_value + ")");
    std::snprintf(buf, sizeof buf, "%.3f", walk_seconds[static_cast<std::size_t>(k)]);
    out << "hgm," << k << "," << buf << "," << walk_value << ",\n";
    std::snprintf(buf, sizeof buf, "%.3f", enum_seconds);
    out << "enumerate," << k << "," << buf << "," << enum_value << "," << count << "\n";
  }
  return 0;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const MethodMismatchError*>(&e)) return 3;
  if (dynamic_cast<const NotInSemigroupError*>(&e)) return 4;
  if (dynamic_cast<const GenericityError*>(&e)) return 5;
  if (dynamic_cast<const SingularStepError*>(&e)) return 5;
  if (dynamic_cast<const SingularMatrixError*>(&e)) return 5;
  if (dynamic_cast<const PoleError*>(&e)) return 5;
  if (dynamic_cast<const ZeroNormalizerError*>(&e)) return 5;
  return 2;  // parse / validation / precondition failures
}

int run_command(const std::string& name, const Problem& p, const CliOptions& opt,
                std::ostream& out, std::ostream& err) {
  try {
    if (name == "toric") return cmd_toric(p, opt, out);
    if (name == "macaulay") return cmd_macaulay(p, opt, out);
    if (name == "recurrence") return cmd_recurrence(p, opt, out);
    if (name == "eval") return cmd_eval(p, opt, out);
    if (name == "enumerate") return cmd_enumerate(p, opt, out);
    if (name == "path") return cmd_path(p, opt, out);
    if (name == "bench") return cmd_bench(p, opt, out);
    err << "unknown command: " << name << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace ahg
