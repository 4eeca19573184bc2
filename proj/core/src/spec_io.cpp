#include "nlft/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nlft/errors.hpp"

namespace nlft {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path.empty() ? "document" : path, "expected an object");
  auto it = obj.find(key);
  const std::string sub = path.empty() ? key : path + "." + key;
  if (it == obj.end()) fail(sub, "missing field");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Measure measure_from_spec(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) fail("document", "expected an object");

  Density ac = NoDensity{};
  const json& jac = field(doc, "ac", "");
  const json& kind = field(jac, "kind", "ac");
  if (!kind.is_string()) fail("ac.kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "constant") {
    ac = ConstantDensity{number(field(jac, "value", "ac"), "ac.value")};
  } else if (k == "table") {
    ac = TableDensity{numbers(field(jac, "xs", "ac"), "ac.xs"), numbers(field(jac, "ys", "ac"), "ac.ys")};
  } else if (k != "none") {
    fail("ac.kind", "unknown kind '" + k + "'");
  }

  std::vector<Atom> atoms;
  if (auto it = doc.find("atoms"); it != doc.end()) {
    if (!it->is_array()) fail("atoms", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = "atoms[" + std::to_string(i) + "]";
      const json& a = (*it)[i];
      atoms.push_back(Atom{number(field(a, "x", p), p + ".x"), number(field(a, "mass", p), p + ".mass")});
    }
  }

  std::optional<double> period;
  if (auto it = doc.find("period"); it != doc.end() && !it->is_null()) period = number(*it, "period");
  return Measure(std::move(ac), std::move(atoms), period);
}

Measure measure_from_file(const std::string& path) { return measure_from_spec(slurp(path)); }

std::string measure_to_spec(const Measure& mu) {
  json doc;
  if (auto* c = std::get_if<ConstantDensity>(&mu.ac()))
    doc["ac"] = {{"kind", "constant"}, {"value", c->value}};
  else if (auto* t = std::get_if<TableDensity>(&mu.ac()))
    doc["ac"] = {{"kind", "table"}, {"xs", t->xs}, {"ys", t->ys}};
  else
    doc["ac"] = {{"kind", "none"}};
  doc["atoms"] = json::array();
  for (const Atom& a : mu.atoms()) doc["atoms"].push_back({{"x", a.x}, {"mass", a.mass}});
  doc["period"] = mu.period() ? json(*mu.period()) : json(nullptr);
  return doc.dump(2) + "\n";
}

Potential potential_from_spec(std::string_view text) {
  const json doc = parse(text);
  const json& kind = field(doc, "kind", "");
  if (!kind.is_string()) fail("kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "discrete") {
    DiscretePotential pot;
    pot.spacing = number(field(doc, "spacing", ""), "spacing");
    pot.masses = numbers(field(doc, "masses", ""), "masses");
    if (auto it = doc.find("first_index"); it != doc.end()) {
      if (!it->is_number_integer()) fail("first_index", "expected an integer");
      pot.first_index = it->get<int>();
    }
    validate(pot);
    return pot;
  }
  if (k == "step") {
    StepPotential pot;
    pot.breakpoints = numbers(field(doc, "breakpoints", ""), "breakpoints");
    pot.values = numbers(field(doc, "values", ""), "values");
    validate(pot);
    return pot;
  }
  fail("kind", "unknown kind '" + k + "'");
}

Potential potential_from_file(const std::string& path) { return potential_from_spec(slurp(path)); }

std::string potential_to_spec(const Potential& pot) {
  json doc;
  if (auto* d = std::get_if<DiscretePotential>(&pot)) {
    doc = {{"kind", "discrete"}, {"spacing", d->spacing}, {"masses", d->masses}, {"first_index", d->first_index}};
  } else {
    const auto& s = std::get<StepPotential>(pot);
    doc = {{"kind", "step"}, {"breakpoints", s.breakpoints}, {"values", s.values}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace nlft
