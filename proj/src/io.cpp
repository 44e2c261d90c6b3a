#include "charkit/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "charkit/error.hpp"
#include "charkit/families.hpp"

namespace charkit {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw InputError(path + ": " + ex.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& ex) {
    throw InputError(std::string("field '") + key + "': " + ex.what());
  }
}

}  // namespace

GroupPtr group_from_json(const Json& j, std::size_t order_cap) {
  const auto degree = field<std::size_t>(j, "degree");
  const auto gens = field<std::vector<std::vector<long>>>(j, "generators");
  if (degree == 0 || degree > Permutation::kMaxDegree) throw InputError("degree out of range");
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    if (g.size() != degree) throw InputError("generator length does not match degree");
    std::vector<Point> img;
    for (long v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree) throw InputError("generator image out of range");
      img.push_back(static_cast<Point>(v));
    }
    perms.emplace_back(std::move(img));
  }
  if (perms.empty()) perms.push_back(Permutation::identity(degree));
  ClosureOptions opts;
  opts.order_cap = order_cap;
  opts.name = j.contains("name") ? field<std::string>(j, "name") : std::string("group");
  return closure(degree, perms, opts);
}

GroupPtr load_group_file(const std::string& path, std::size_t order_cap) {
  return group_from_json(read_json_file(path), order_cap);
}

GroupPtr load_group(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return load_group_file(arg);
  return parse_family(arg);
}

VectorAction action_from_json(const Json& j) {
  VectorAction a;
  const auto q = field<long>(j, "q");
  const auto dim = field<long>(j, "dim");
  if (q < 2 || q > 65535 || dim < 1) throw InputError("q or dim out of range");
  a.q = static_cast<std::uint32_t>(q);
  a.dim = static_cast<std::size_t>(dim);
  for (const auto& m : field<std::vector<std::vector<std::vector<std::int64_t>>>>(j, "generators")) {
    if (m.size() != a.dim) throw InputError("generator has the wrong number of rows");
    std::vector<std::int64_t> flat;
    for (const auto& row : m) {
      if (row.size() != a.dim) throw InputError("generator row has the wrong length");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    a.generators.push_back(std::move(flat));
  }
  return a;
}

VectorAction load_action_file(const std::string& path) { return action_from_json(read_json_file(path)); }

Json table_to_json(const CharacterTable& t) {
  const Group& g = t.group();
  Json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["prime"] = t.field().p;
  Json sizes = Json::array(), reps = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    sizes.push_back(g.class_size(c));
    reps.push_back(g.class_representative(c));
  }
  j["class_sizes"] = std::move(sizes);
  j["representatives"] = std::move(reps);
  Json chars = Json::array();
  for (const auto& chi : t) {
    Json row;
    row["degree"] = chi.degree();
    Json mults = Json::array();
    for (std::size_t c = 0; c < chi.class_count(); ++c) {
      const auto m = chi.multiplicities(c);
      mults.push_back(std::vector<std::int32_t>(m.begin(), m.end()));
    }
    row["multiplicities"] = std::move(mults);
    chars.push_back(std::move(row));
  }
  j["characters"] = std::move(chars);
  return j;
}

Json decomposition_to_json(const Decomposition& d, const CharacterTable& t) {
  Json j;
  j["eta"] = d.eta();
  Json cs = Json::array();
  for (const auto& c : d.constituents)
    cs.push_back({{"index", c.index}, {"multiplicity", c.multiplicity}, {"degree", t[c.index].degree()}});
  j["constituents"] = std::move(cs);
  return j;
}

Json chain_to_json(Lab& lab, const Chain& chain) {
  Json j;
  j["length"] = chain.length();
  Json links = Json::array();
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    const std::size_t n = chain.links[i];
    const auto& nu = lab.view_table(n)[chain.characters[i]];
    links.push_back({{"normal", n},
                     {"order", lab.normal(n).order()},
                     {"character", chain.characters[i]},
                     {"degree", nu.degree()}});
  }
  j["links"] = std::move(links);
  return j;
}

Json orbits_to_json(const OrbitSummary& s) {
  return {{"orbits", s.orbit_count},
          {"group_order", s.group_order},
          {"derived_length", s.derived_length},
          {"orbit_sizes", s.orbit_sizes}};
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json record_to_json(const VerificationRecord& r) {
  Json preds = Json::object();
  for (const auto& [name, outcome] : r.predicates) preds[name] = std::string(outcome_name(outcome));
  return {{"group", r.group},
          {"kind", r.kind},
          {"chi", r.chi},
          {"psi", r.psi},
          {"alpha", optional_json(r.alpha)},
          {"eta", r.eta},
          {"dl", optional_json(r.dl)},
          {"chain_length", optional_json(r.chain_length)},
          {"coprime_degrees", r.coprime_degrees},
          {"has_linear_constituent", r.has_linear_constituent},
          {"supersolvable", r.supersolvable},
          {"note", r.note},
          {"predicates", std::move(preds)},
          {"holds", r.holds()}};
}

std::string record_tsv_header() {
  return "group\tkind\tchi\tpsi\talpha\teta\tdl\tchain_length\tcoprime_degrees\thas_linear_constituent\t"
         "supersolvable\tholds\tpredicates\tnote";
}

std::string record_to_tsv(const VerificationRecord& r) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  std::ostringstream out;
  out << r.group << '\t' << r.kind << '\t' << r.chi << '\t' << r.psi << '\t' << opt(r.alpha) << '\t' << r.eta
      << '\t' << opt(r.dl) << '\t' << opt(r.chain_length) << '\t' << r.coprime_degrees << '\t'
      << r.has_linear_constituent << '\t' << r.supersolvable << '\t' << r.holds() << '\t';
  bool first = true;
  for (const auto& [name, outcome] : r.predicates) {
    out << (first ? "" : ",") << name << '=' << outcome_name(outcome);
    first = false;
  }
  if (first) out << '-';
  out << '\t' << (r.note.empty() ? "-" : r.note);
  return out.str();
}

}  // namespace charkit
