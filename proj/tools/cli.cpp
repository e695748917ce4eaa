#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qdouble/central_quotient.hpp"
#include "qdouble/simple_currents.hpp"
#include "qdouble/twisted_double.hpp"

namespace qdouble::cli {

using json = nlohmann::ordered_json;

namespace {

namespace fs = std::filesystem;

json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path.string() + ": " + e.what());
  }
}

// A JSON node that is either inline or a string naming a file relative to
// the referencing file's directory.
struct Node {
  json value;
  fs::path dir;
};

Node resolve(const json& j, const fs::path& dir) {
  if (!j.is_string()) return {j, dir};
  const fs::path p = dir / j.get<std::string>();
  return {load_json(p), p.parent_path()};
}

Node load_node(const std::string& path) { return {load_json(path), fs::path(path).parent_path()}; }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "': " + e.what());
  }
}

GroupPtr preset_group(const std::string& name) {
  if (const auto x = name.find('x'); x != std::string::npos) {
    auto g = preset_group(name.substr(0, x));
    auto h = preset_group(name.substr(x + 1));
    return direct_product(*g, *h);
  }
  if (name == "Q8") return quaternion_group();
  int n = 0;
  try {
    n = name.size() > 1 ? std::stoi(name.substr(1)) : 0;
  } catch (const std::exception&) {
    n = 0;
  }
  if (n >= 1 && name[0] == 'Z') return cyclic_group(n);
  if (n >= 1 && name[0] == 'D') return dihedral_group(n);
  throw Error(ErrorCode::InvalidInput, "unknown group preset '" + name + "' (Z<n>, D<n>, Q8, AxB)");
}

// {"order": m, "table": [[...], ...]} with the identity at index 0, or
// {"preset": "Q8"}.
GroupPtr parse_group(const Node& n) {
  const json& j = n.value;
  if (j.is_object() && j.contains("preset")) return preset_group(field<std::string>(j, "preset"));
  auto table = field<std::vector<std::vector<int>>>(j, "table");
  if (j.contains("order") && field<int>(j, "order") != static_cast<int>(table.size()))
    throw Error(ErrorCode::InvalidInput, "group order does not match the table");
  auto g = make_group(table);
  const auto& labels = g->relabeling();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i)) throw Error(ErrorCode::InvalidInput, "the identity must be element 0");
  return g;
}

// A table of exponents mod m with `arity` arguments, each below `sizes[i]`:
// a dense array in index order, {"values": [...]}, or sparse
// {"entries": [[a1, ..., ak, e], ...]} with unlisted tuples 0.
std::vector<int> parse_table(const json& j, std::span<const int> sizes, int m) {
  std::size_t total = 1;
  for (int s : sizes) total *= static_cast<std::size_t>(s);
  std::vector<int> out(total, 0);
  auto reduce = [m](long long v) { return static_cast<int>(((v % m) + m) % m); };
  if (j.is_array() || (j.is_object() && j.contains("values"))) {
    const auto values = j.is_array() ? j.get<std::vector<long long>>() : field<std::vector<long long>>(j, "values");
    if (values.size() != total) throw Error(ErrorCode::InvalidInput, "table has " + std::to_string(values.size()) +
                                                                         " values, expected " + std::to_string(total));
    for (std::size_t i = 0; i < total; ++i) out[i] = reduce(values[i]);
    return out;
  }
  for (const auto& e : field<std::vector<std::vector<long long>>>(j, "entries")) {
    if (e.size() != sizes.size() + 1) throw Error(ErrorCode::InvalidInput, "table entry has the wrong arity");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (e[i] < 0 || e[i] >= sizes[i]) throw Error(ErrorCode::InvalidInput, "table entry out of range", {static_cast<int>(e[i])});
      idx = idx * sizes[i] + static_cast<std::size_t>(e[i]);
    }
    out[idx] = reduce(e.back());
  }
  return out;
}

// Cochain file: {"group"?, "degree": k, "modulus": M, "entries" | "values"},
// or the generators {"cyclic": {"n", "q"}} and
// {"pullback": {"group", "cocycle", "map"}} along a homomorphism G -> Q.
Cochain parse_cocycle(const Node& n, const GroupPtr& g) {
  const json& j = n.value;
  if (j.is_object() && j.contains("group") && !j.contains("pullback")) {
    const GroupPtr own = parse_group(resolve(j.at("group"), n.dir));
    if (!own->same_table(*g)) throw Error(ErrorCode::InvalidInput, "cochain was written for a different group");
  }
  if (j.is_object() && j.contains("cyclic")) {
    const json& c = j.at("cyclic");
    const int order = field<int>(c, "n");
    if (order < 1 || !cyclic_group(order)->same_table(*g))
      throw Error(ErrorCode::InvalidInput, "cyclic cocycle needs the group Z_" + std::to_string(order));
    return cyclic_cocycle(order, field<int>(c, "q"));
  }
  if (j.is_object() && j.contains("pullback")) {
    const json& p = j.at("pullback");
    const GroupPtr q = parse_group(resolve(field<json>(p, "group"), n.dir));
    const Cochain base = parse_cocycle(resolve(field<json>(p, "cocycle"), n.dir), q);
    const auto map = field<std::vector<int>>(p, "map");
    if (map.size() != static_cast<std::size_t>(g->order())) throw Error(ErrorCode::InvalidInput, "pullback map has the wrong size");
    for (int v : map)
      if (v < 0 || v >= q->order()) throw Error(ErrorCode::InvalidInput, "pullback map leaves the group", {v});
    if (!is_homomorphism(*g, *q, map)) throw Error(ErrorCode::InvalidInput, "pullback map is not a homomorphism");
    return pullback(base, g, map);
  }
  const int degree = j.value("degree", 3);
  const int m = field<int>(j, "modulus");
  if (degree < 0 || degree > 3 || m < 1) throw Error(ErrorCode::InvalidInput, "cochain needs degree 0..3 and a positive modulus");
  const std::vector<int> sizes(degree, g->order());
  return Cochain(g, degree, m, parse_table(j, sizes, m));
}

Cochain trivial_cocycle(const GroupPtr& g) { return Cochain(g, 3, 1); }

// Action file: {"acting": group, "target": group, "perm": [[g<x for g] for x]}.
GroupAction parse_action(const Node& n) {
  const json& j = n.value;
  const GroupPtr f = parse_group(resolve(field<json>(j, "acting"), n.dir));
  const GroupPtr g = parse_group(resolve(field<json>(j, "target"), n.dir));
  return validate_action(f, g, field<std::vector<std::vector<int>>>(j, "perm"));
}

// Cleft file: {"modulus": M, "action": action, "gamma": table [x][g][h],
// "theta": table [g][x][y], "omega"?: cochain}; each part inline or a path.
CleftObject parse_cleft(const Node& n) {
  const json& j = n.value;
  const int m = field<int>(j, "modulus");
  if (m < 1) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
  GroupAction action = parse_action(resolve(field<json>(j, "action"), n.dir));
  const GroupPtr g = action.target;
  const int ng = g->order(), nf = action.acting->order();
  const Cochain omega = j.contains("omega") ? parse_cocycle(resolve(j.at("omega"), n.dir), g) : trivial_cocycle(g);
  const int gamma_sizes[3] = {nf, ng, ng};
  const int theta_sizes[3] = {ng, nf, nf};
  auto gamma = parse_table(resolve(field<json>(j, "gamma"), n.dir).value, gamma_sizes, m);
  auto theta = parse_table(resolve(field<json>(j, "theta"), n.dir).value, theta_sizes, m);
  return validate_cleft(std::move(action), m, std::move(gamma), std::move(theta), omega);
}

Subgroup parse_subgroup(const std::string& text, const FiniteGroup& f) {
  std::vector<int> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      members.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "bad subgroup element '" + item + "'");
    }
  }
  members.push_back(0);
  for (int v : members)
    if (v < 0 || v >= f.order()) throw Error(ErrorCode::InvalidInput, "subgroup element out of range", {v});
  return Subgroup::from_members(f, std::move(members));
}

json members(const Subgroup& s) { return s.members(); }

json verification_json(const VerificationReport& r) {
  json fams = json::array();
  for (const auto& f : r.families)
    fams.push_back({{"name", f.name}, {"checked", f.checked}, {"failures", f.failures}, {"detail", f.detail}, {"witness", f.witness}});
  return {{"passed", r.passed()}, {"exhaustive", r.exhaustive}, {"checked", r.checked()}, {"families", fams}};
}

json morphism_json(const MorphismReport& r) {
  return {{"ok", r.ok}, {"checked", r.checked}, {"failed", r.failed}, {"witness", r.witness}};
}

class Runner {
 public:
  explicit Runner(const RunConfig& config) : config_(config) {}

  int dispatch(json& out) {
    const std::string& c = config_.command;
    out["command"] = c;
    if (config_.section != "minimal") throw Error(ErrorCode::InvalidInput, "only --section minimal is supported");
    if (c == "check-cocycle") return check_cocycle(out);
    if (c == "double") return double_cmd(out);
    if (c == "group-likes") return group_likes_cmd(out);
    if (c == "admissible") return admissible(out);
    if (c == "quotient") return quotient(out);
    if (c == "verify") return verify(out);
    if (c == "simple-currents") return simple_currents_cmd(out);
    if (c == "modularity") return modularity(out);
    if (c == "independence") return independence(out);
    throw Error(ErrorCode::InvalidInput, "unknown command '" + c + "'");
  }

 private:
  const RunConfig& config_;

  // --group, or the group named inside --cocycle.
  GroupPtr group() const {
    if (!config_.group_path.empty()) return parse_group(load_node(config_.group_path));
    if (!config_.cocycle_path.empty()) {
      const Node c = load_node(config_.cocycle_path);
      if (c.value.is_object() && c.value.contains("group")) return parse_group(resolve(c.value.at("group"), c.dir));
    }
    throw Error(ErrorCode::InvalidInput, "--group is required");
  }
  Cochain cocycle(const GroupPtr& g) const {
    return config_.cocycle_path.empty() ? trivial_cocycle(g) : parse_cocycle(load_node(config_.cocycle_path), g);
  }
  // The cleft object of --cleft, or c_omega of --group/--cocycle.
  CleftObject cleft() const {
    if (!config_.cleft_path.empty()) return parse_cleft(load_node(config_.cleft_path));
    const GroupPtr g = group();
    return canonical_cleft(g, cocycle(g));
  }
  Subgroup subgroup(const FiniteGroup& f) const {
    if (!config_.subgroup) throw Error(ErrorCode::InvalidInput, "--subgroup is required");
    return parse_subgroup(*config_.subgroup, f);
  }

  int check_cocycle(json& out) {
    const GroupPtr g = group();
    if (config_.cocycle_path.empty()) throw Error(ErrorCode::InvalidInput, "--cocycle is required");
    const Cochain w = cocycle(g);
    const auto r = is_normalized_cocycle(w);
    out["group_order"] = g->order();
    out["degree"] = w.degree();
    out["modulus"] = w.modulus();
    out["normalized"] = r.normalized;
    out["closed"] = r.closed;
    out["witness"] = r.witness;
    return r.ok() ? kOk : kMathNo;
  }

  int double_cmd(json& out) {
    const GroupPtr g = group();
    const DoubleContext ctx = build_double(g, cocycle(g));
    out["dim"] = ctx.algebra.dim();
    out["modulus"] = ctx.algebra.modulus();
    out["verification"] = verification_json(ctx.verification);
    const CenterReport cr = c_omega_center(ctx);
    out["center"] = members(cr.center);
    out["gamma_trivial"] = members(cr.gamma_trivial);
    out["c_center"] = members(cr.c_center);
    out["h2"] = cr.h2;
    return ctx.verification.passed() ? kOk : kMathNo;
  }

  int group_likes_cmd(json& out) {
    const GroupLikeData data = group_likes(cleft());
    out["modulus"] = data.modulus();
    out["g_hat"] = data.g_hat.size();
    out["g_hat_invariant"] = data.g_hat_invariant.size();
    out["f_gamma"] = members(data.f_gamma);
    out["z_c"] = members(data.z_c);
    json sections = json::object();
    for (int x : data.f_gamma.members()) sections[std::to_string(x)] = data.t(x);
    out["sections"] = sections;
    out["group_likes"] = data.all.size();
    out["central_group_likes"] = data.central.size();
    const bool seq = data.all.size() == data.g_hat.size() * data.f_gamma.size() &&
                     data.central.size() == data.g_hat_invariant.size() * data.z_c.size();
    out["exact_sequences"] = seq;
    const FactorSetReport fs = verify_factor_set(data);
    out["factor_set_ok"] = fs.ok();
    return seq && fs.ok() ? kOk : kInternal;
  }

  static json certificate_json(const AdmissibilityCertificate& cert) {
    return {{"subgroup", cert.a.members()}, {"modulus", cert.modulus}, {"t", cert.t},
            {"tau", cert.tau},              {"nu", cert.nu},           {"s", cert.s}};
  }

  // Shared front half of admissible / quotient.
  std::optional<AdmissibilityCertificate> admit(const GroupLikeData& data, const Subgroup& a, json& out) {
    out["subgroup"] = members(a);
    const auto nus = enumerate_nu(data, a);
    out["nu_choices"] = nus.size();
    const auto res = is_admissible(data, a, nus.empty() ? 0 : config_.nu);
    if (const auto* no = std::get_if<NotAdmissible>(&res)) {
      out["admissible"] = false;
      out["reason"] = std::string(to_string(no->reason));
      out["witness"] = no->witness;
      return std::nullopt;
    }
    out["admissible"] = true;
    out["nu_index"] = config_.nu;
    return std::get<AdmissibilityCertificate>(res);
  }

  int admissible(json& out) {
    const GroupLikeData data = group_likes(cleft());
    const Subgroup a = subgroup(data.cleft.f_group());
    const auto cert = admit(data, a, out);
    if (!cert) return kMathNo;
    out["certificate"] = certificate_json(*cert);
    const CertificateReport cr = check_certificate(data, *cert);
    out["certificate_check"] = {{"ok", cr.ok}, {"checked", cr.checked}, {"failed", cr.failed}, {"witness", cr.witness}};
    return cr.ok ? kOk : kInternal;
  }

  int quotient(json& out) {
    const GroupLikeData data = group_likes(cleft());
    const Subgroup a = subgroup(data.cleft.f_group());
    const auto cert = admit(data, a, out);
    if (!cert) return kMathNo;
    std::optional<CharacterFamily> f;
    if (config_.twist) {
      const auto homs = character_homs(data, a);
      if (*config_.twist < 0 || *config_.twist >= static_cast<int>(homs.size()))
        throw Error(ErrorCode::InvalidInput, "twist index out of range (" + std::to_string(homs.size()) + " homomorphisms)",
                    {*config_.twist});
      f = homs[*config_.twist];
      out["twist"] = *config_.twist;
    }
    const QuotientBuild qb = build_quotient(data, *cert, f ? &*f : nullptr);
    const VerificationReport vr = verify_quasi_hopf(build_algebra(qb.cbar));
    const QuotientReport qr = verify_quotient(qb, data.cleft);
    out["dim"] = qb.dim();
    out["modulus"] = qb.cbar.modulus;
    out["quotient_order"] = qb.cbar.f_order();
    out["section"] = qb.section.section;
    out["gamma"] = qb.cbar.gamma;
    out["theta"] = qb.cbar.theta;
    out["chi"] = qb.chi;
    out["verification"] = verification_json(vr);
    out["morphism"] = morphism_json(qr.morphism);
    out["surjective"] = qr.surjective;
    return vr.passed() && qr.ok() ? kOk : kInternal;
  }

  int verify(json& out) {
    const CleftObject c = cleft();
    const QuasiHopfAlgebra h(c);
    const VerificationReport vr = verify_quasi_hopf(h);
    out["dim"] = h.dim();
    out["modulus"] = h.modulus();
    out["verification"] = verification_json(vr);
    return vr.passed() ? kOk : kMathNo;
  }

  DoubleContext double_context() const {
    const GroupPtr g = group();
    return build_double(g, cocycle(g), false);
  }

  int simple_currents_cmd(json& out) {
    const SimpleCurrents sc = simple_currents(double_context());
    out["modulus"] = sc.modulus();
    out["count"] = sc.size();
    json list = json::array();
    for (const auto& s : sc.currents) list.push_back({{"z", s.z}, {"chi", s.chi}, {"character", s.lambda}});
    out["currents"] = list;
    std::vector<std::vector<int>> tensor(sc.size(), std::vector<int>(sc.size()));
    std::vector<std::vector<int>> bichar(sc.size(), std::vector<int>(sc.size()));
    for (int i = 0; i < sc.size(); ++i)
      for (int j = 0; j < sc.size(); ++j) {
        tensor[i][j] = sc_tensor(sc, i, j);
        bichar[i][j] = bicharacter(sc, i, j);
      }
    const EMData em = em_data(sc);
    out["tensor"] = tensor;
    out["d"] = [&] {
      std::vector<std::vector<int>> d(sc.size(), std::vector<int>(sc.size()));
      for (int i = 0; i < sc.size(); ++i)
        for (int j = 0; j < sc.size(); ++j) d[i][j] = em.d_at(i, j);
      return d;
    }();
    out["bicharacter"] = bichar;
    return kOk;
  }

  int modularity(json& out) {
    const SimpleCurrents sc = simple_currents(double_context());
    const Subgroup a = subgroup(sc.data.cleft.f_group());
    const auto cert = admit(sc.data, a, out);
    if (!cert) return kMathNo;
    const ModularityReport mr = modularity_verdict(sc, *cert);
    out["modulus"] = mr.pairing.modulus;
    out["pairing"] = mr.pairing.values;
    out["quotient_dim"] = mr.quotient_dim;
    out["double_braiding_trivial"] = mr.double_braiding_trivial;
    out["verdict"] = mr.modular ? "MODULAR" : "NOT MODULAR";
    if (!mr.double_braiding_trivial) return kInternal;
    return mr.modular ? kOk : kMathNo;
  }

  int independence(json& out) {
    const SimpleCurrents sc = simple_currents(double_context());
    const Subgroup a = subgroup(sc.data.cleft.f_group());
    const auto cert = admit(sc.data, a, out);
    if (!cert) return kMathNo;
    const IndependenceReport ir = independence_check(sc, a);
    const CovarianceReport cov = twist_covariance(sc, a, cert->nu);
    out["hypothesis"] = ir.hypothesis;
    out["choices"] = ir.choices;
    out["identical"] = ir.identical;
    json tables = json::array();
    for (const auto& t : ir.tables) tables.push_back(t.values);
    out["tables"] = tables;
    out["twist_covariance"] = cov.ok;
    if (!cov.ok) return kInternal;
    return ir.ok() ? kOk : kInternal;
  }
};

void write_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      write_text(v, out, prefix + k + ".");
    } else if (v.is_string()) {
      out << prefix << k << ": " << v.get<std::string>() << "\n";
    } else {
      out << prefix << k << ": " << v.dump() << "\n";
    }
  }
}

void emit(const json& j, const RunConfig& config, std::ostream& out) {
  if (config.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    write_text(j, out);
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list = {"check-cocycle", "double",          "group-likes", "admissible",  "quotient",
                                                "verify",        "simple-currents", "modularity",  "independence"};
  return list;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  json result = json::object();
  int status = kOk;
  try {
    if (config.format != "json" && config.format != "text") throw Error(ErrorCode::InvalidInput, "--format must be json or text");
    status = Runner(config).dispatch(result);
  } catch (const InternalError& e) {
    result["error"] = "Internal";
    result["message"] = e.what();
    result["witness"] = e.witness();
    status = kInternal;
  } catch (const Error& e) {
    result["error"] = std::string(to_string(e.code()));
    result["message"] = e.what();
    result["witness"] = e.witness();
    status = kInputError;
  } catch (const std::exception& e) {
    result["error"] = "Internal";
    result["message"] = e.what();
    status = kInternal;
  }
  result["exit_code"] = status;
  emit(result, config, out);
  if (status == kInputError || status == kInternal) err << "qdouble: " << result["message"].get<std::string>() << "\n";
  return status;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Twisted quantum doubles, cleft extensions and their central quotients"};
  app.add_option("command", config.command, "Command")->required()->check(CLI::IsMember(commands()));
  app.add_option("--group", config.group_path, "Group JSON file");
  app.add_option("--cocycle", config.cocycle_path, "3-cocycle JSON file (default: trivial)");
  app.add_option("--cleft", config.cleft_path, "Cleft object JSON file");
  app.add_option("--subgroup", config.subgroup, "Subgroup elements, comma separated");
  app.add_option("--nu", config.nu, "Index of nu among the sorted solutions");
  app.add_option("--section", config.section, "Section policy")->check(CLI::IsMember({"minimal"}));
  app.add_option("--twist", config.twist, "Twist nu by this homomorphism A -> G^F");
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  return run(config, out, err);
}

}  // namespace qdouble::cli
