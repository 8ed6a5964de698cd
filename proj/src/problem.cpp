#include "ahg/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ahg/errors.hpp"

namespace ahg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

const json& require(const json& doc, const std::string& field) {
  auto it = doc.find(field);
  if (it == doc.end()) fail(field, "missing");
  return *it;
}

const json& require_key(const json& doc, const std::string& key, const std::string& label) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(label, "missing");
  return *it;
}

long as_long(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  return v.get<long>();
}

std::vector<long> as_long_vector(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of integers");
  std::vector<long> out;
  out.reserve(v.size());
  for (const auto& entry : v) out.push_back(as_long(entry, field));
  return out;
}

void check_length(const std::vector<long>& v, int want, const std::string& field) {
  if (static_cast<int>(v.size()) != want)
    fail(field, "expected " + std::to_string(want) + " entries");
}

}  // namespace

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");

  Problem p;

  const json& jA = require(doc, "A");
  if (!jA.is_array() || jA.empty()) fail("A", "expected a non-empty array of rows");
  std::vector<std::vector<long>> rows;
  for (const auto& r : jA) rows.push_back(as_long_vector(r, "A"));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail("A", "rows have unequal lengths");
  p.A = ConfigMatrix::from_rows(rows);
  const int d = p.A.d, n = p.A.n;

  p.beta = as_long_vector(require(doc, "beta"), "beta");
  check_length(p.beta, d, "beta");

  const json& jX = require(doc, "X");
  if (!jX.is_array()) fail("X", "expected an array of fraction strings");
  for (const auto& entry : jX) {
    if (!entry.is_string()) fail("X", "entries must be fraction strings");
    try {
      p.X.push_back(Rat::from_string(entry.get<std::string>()));
    } catch (const Error&) {
      fail("X", "invalid fraction \"" + entry.get<std::string>() + "\"");
    }
  }
  if (static_cast<int>(p.X.size()) != n)
    fail("X", "expected " + std::to_string(n) + " entries");

  const json& jS = require(doc, "S");
  if (!jS.is_array() || jS.empty()) fail("S", "expected a non-empty array of exponent vectors");
  for (const auto& entry : jS) {
    std::vector<long> e = as_long_vector(entry, "S");
    check_length(e, n, "S");
    ExpVec v(n, 0);
    for (int i = 0; i < n; ++i) {
      if (e[i] < 0) fail("S", "exponents must be nonnegative");
      v[i] = e[i];
    }
    p.S.push_back(v);
  }
  if (!is_zero_exp(p.S.front()))
    fail("S", "first element must be the zero exponent (the monomial 1)");

  const json& jlegs = require(doc, "legs");
  if (!jlegs.is_array()) fail("legs", "expected an array of {H, steps}");
  for (const auto& entry : jlegs) {
    if (!entry.is_object()) fail("legs", "expected objects with H and steps");
    Leg leg;
    leg.H = as_long_vector(require_key(entry, "H", "legs[].H"), "legs[].H");
    check_length(leg.H, d, "legs[].H");
    leg.m = as_long(require_key(entry, "steps", "legs[].steps"), "legs[].steps");
    if (leg.m < 0) fail("legs[].steps", "must be nonnegative");
    p.legs.push_back(leg);
  }

  std::string order_name = "grevlex";
  if (auto it = doc.find("order"); it != doc.end()) {
    if (!it->is_string()) fail("order", "expected \"lex\" or \"grevlex\"");
    order_name = it->get<std::string>();
  }
  try {
    p.order = TermOrder::named(order_name, n);
  } catch (const Error&) {
    fail("order", "unknown order \"" + order_name + "\"");
  }

  if (auto it = doc.find("weights"); it != doc.end()) {
    p.weights = as_long_vector(*it, "weights");
    check_length(p.weights, n, "weights");
    for (long w : p.weights)
      if (w <= 0) fail("weights", "entries must be positive");
  }

  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("file: cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace ahg
