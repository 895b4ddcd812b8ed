#include "cli/commands.hpp"

#include <chrono>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "invforms/arith.hpp"
#include "invforms/errors.hpp"
#include "invforms/lattice_cache.hpp"
#include "invforms/oracle.hpp"
#include "invforms/repdata.hpp"

namespace invforms::cli {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int verdict_exit(Verdict v) { return v == Verdict::Unknown ? exit_code::kUnknown : exit_code::kDecided; }

std::string join_entries(const json& entries) {
  std::string s;
  for (const auto& e : entries) {
    if (!s.empty()) s += ", ";
    s += e.at("label").get<std::string>() + ":" + std::to_string(e.at("multiplicity").get<int>());
  }
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// Aligned text table; the first row is the header.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) line += c + 1 == r.size() ? r[c] : pad(r[c], width[c] + 2);
    out << line << '\n';
  }
}

struct Options {
  bool json = false;
  // classify
  std::string type;
  int rank = 0;
  std::string weight;
  int p = 2;
  // factors / restrict / verify
  std::string family;
  int n = 0;
  int r = 0;
  int s = 0;
  int index = 0;
  std::string oracle = "both";
  // table
  std::string name;
  int max_param = 64;
};

FactorFamily parse_factor_family(const std::string& f) {
  if (f == "C") return FactorFamily::CFundamental;
  if (f == "A") return FactorFamily::APair;
  throw InputError("family must be C or A, got '" + f + "'");
}

QueryResult do_classify(const Options& o) {
  const SimpleType type(parse_family(o.type), o.rank);
  const Weight w = parse_weight(o.weight, o.rank);
  Stopwatch sw;
  const FormClass fc = classify(type, w, o.p);
  QueryResult q;
  q.command = "classify";
  q.query = {{"type", std::string(to_string(type.family()))}, {"rank", o.rank}, {"weight", w.coeffs()}, {"char", o.p}};
  q.payload = {{"verdict", std::string(to_string(fc.verdict))}, {"group", type.name()}, {"weight", w.to_string()}};
  q.provenance = fc.provenance;
  q.elapsed_ms = sw.ms();
  return q;
}

json entries_json(FactorFamily fam, const std::vector<BranchEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"label", e.label.to_string(fam)}, {"multiplicity", e.multiplicity}});
  return out;
}

QueryResult do_factors(const Options& o) {
  const FactorFamily fam = parse_factor_family(o.family);
  Stopwatch sw;
  QueryResult q;
  q.command = "factors";
  CompFactorSet set;
  if (fam == FactorFamily::CFundamental) {
    set = comp_factors_C(o.rank, o.r, o.p);
    q.query = {{"family", "C"}, {"rank", o.rank}, {"r", o.r}, {"char", o.p}};
  } else {
    set = comp_factors_A(o.n, o.r, o.s, o.p);
    q.query = {{"family", "A"}, {"n", o.n}, {"r", o.r}, {"s", o.s}, {"char", o.p}};
  }
  std::vector<BranchEntry> entries;
  for (const auto& l : set.labels) entries.push_back({l, 1});
  q.payload = {{"factors", entries_json(fam, entries)}};
  q.provenance = fam == FactorFamily::CFundamental ? "weyl-factors-C" : "weyl-factors-A";
  q.elapsed_ms = sw.ms();
  return q;
}

QueryResult do_restrict(const Options& o) {
  const FactorFamily fam = parse_factor_family(o.family);
  Stopwatch sw;
  QueryResult q;
  q.command = "restrict";
  BranchCharacter bc;
  if (fam == FactorFamily::CFundamental) {
    bc = branch_C(o.rank, o.r, o.p);
    q.query = {{"family", "C"}, {"rank", o.rank}, {"r", o.r}, {"char", o.p}};
  } else {
    bc = branch_A(o.n, o.r, o.s, o.p);
    q.query = {{"family", "A"}, {"n", o.n}, {"r", o.r}, {"s", o.s}, {"char", o.p}};
  }
  q.payload = {{"factors", entries_json(fam, bc.entries)}, {"d", bc.d_val}, {"epsilon", bc.epsilon}};
  q.provenance = fam == FactorFamily::CFundamental ? "branch-C" : "branch-A";
  q.elapsed_ms = sw.ms();
  return q;
}

QueryResult do_symgroup(const Options& o) {
  Stopwatch sw;
  const Verdict v = symgroup_classify(o.n, o.r);
  QueryResult q;
  q.command = "symgroup";
  q.query = {{"n", o.n}, {"r", o.r}};
  q.payload = {{"verdict", std::string(to_string(v))}};
  q.provenance = "symplectic-correspondence";
  q.elapsed_ms = sw.ms();
  return q;
}

QueryResult do_verify(const Options& o) {
  const FactorFamily fam = parse_factor_family(o.family);
  if (o.oracle != "gram" && o.oracle != "solver" && o.oracle != "both") {
    throw InputError("--oracle must be gram, solver or both");
  }
  // Type A takes --n directly, or --rank as the Lie rank n - 1.
  const int param = fam == FactorFamily::CFundamental ? o.rank : (o.n > 0 ? o.n : o.rank + 1);
  const int k = o.index;
  Verdict closed;
  if (fam == FactorFamily::CFundamental) {
    if (k < 1 || k > param) throw InputError("--index must satisfy 1 <= index <= rank");
    closed = mainprop_fundamental(SimpleType(Family::C, param), k);
  } else {
    if (k < 1 || k >= param - k) throw InputError("--index must satisfy 1 <= index < n - index");
    closed = quadpropA(param, k);
  }
  Stopwatch sw;
  const LatticeKey key{fam == FactorFamily::CFundamental ? LatticeFamily::C : LatticeFamily::A, param, k};
  const bool gram_applies = fam == FactorFamily::APair || k % 2 == 0;
  std::optional<std::future<OracleReport>> gram_job;
  std::optional<std::future<OracleReport>> solver_job;
  if (o.oracle != "solver" && gram_applies) {
    gram_job = std::async(std::launch::async, [key] { return oracle_gram(*LatticeCache::global().get(key)); });
  }
  if (o.oracle != "gram") {
    solver_job = std::async(std::launch::async, [key] { return oracle_solver(*LatticeCache::global().get(key)); });
  }
  bool agree = true;
  json payload = {{"closed_form", std::string(to_string(closed))}};
  auto record = [&](const char* name, std::optional<std::future<OracleReport>>& job) {
    if (!job) {
      payload[name] = "n/a";
      return;
    }
    const OracleReport rep = job->get();
    payload[name] = std::string(to_string(rep.verdict));
    payload["dim_weyl"] = rep.dim_weyl;
    payload["dim_radical"] = rep.dim_radical;
    payload["dim_irreducible"] = rep.dim_irreducible;
    agree = agree && rep.verdict == closed;
  };
  record("gram", gram_job);
  record("solver", solver_job);
  payload["agree"] = agree;

  QueryResult q;
  q.command = "verify";
  q.query = {{"family", o.family}, {"param", param}, {"index", k}, {"oracle", o.oracle}};
  q.payload = std::move(payload);
  q.provenance = fam == FactorFamily::CFundamental ? "weyl-lattice-C" : "weyl-lattice-A";
  q.elapsed_ms = sw.ms();
  return q;
}

QueryResult do_table(const Options& o) {
  Stopwatch sw;
  QueryResult q;
  q.command = "table";
  q.query = {{"name", o.name}};
  json rows = json::array();
  if (o.name == "duality") {
    for (const auto& r : duality_table()) {
      rows.push_back({{"type", r.type}, {"self_dual", r.self_dual_condition}, {"d_parity", r.parity_rule}});
    }
    q.provenance = "duality-table";
  } else if (o.name == "typeE") {
    for (const auto& r : type_e_table()) {
      const FormClass fc = classify(r.type, r.weight, 2);
      rows.push_back({{"type", r.type.name()},
                      {"weight", r.weight.to_string()},
                      {"verdict", std::string(to_string(r.verdict))},
                      {"classified", std::string(to_string(fc.verdict))}});
    }
    q.provenance = "type-e-table";
  } else if (o.name == "examplesC") {
    if (o.max_param < 5 || o.max_param > 4096) throw InputError("--max must lie in [5, 4096]");
    q.query["max"] = o.max_param;
    for (const auto& f : example_families(o.max_param)) {
      rows.push_back({{"family", f.name},
                      {"parameter", f.parameter},
                      {"first", f.first},
                      {"last", f.last},
                      {"non_orthogonal", f.non_orthogonal}});
    }
    q.provenance = "classifier";
  } else {
    throw InputError("--name must be duality, typeE or examplesC");
  }
  q.payload = {{"rows", std::move(rows)}};
  q.elapsed_ms = sw.ms();
  return q;
}

void print_text(const QueryResult& q, std::ostream& out) {
  const json& p = q.payload;
  if (q.command == "classify" || q.command == "symgroup") {
    out << "verdict: " << p.at("verdict").get<std::string>() << '\n';
    out << "provenance: " << q.provenance << '\n';
  } else if (q.command == "factors") {
    out << join_entries(p.at("factors")) << '\n';
  } else if (q.command == "restrict") {
    out << join_entries(p.at("factors")) << '\n';
  } else if (q.command == "verify") {
    for (const char* k : {"gram", "solver"}) out << k << ": " << p.at(k).get<std::string>() << '\n';
    out << "closed-form: " << p.at("closed_form").get<std::string>() << '\n';
    out << (p.at("agree").get<bool>() ? "AGREE" : "DISAGREE") << '\n';
  } else if (q.command == "table") {
    std::vector<std::vector<std::string>> rows;
    const std::string& name = q.query.at("name").get_ref<const std::string&>();
    if (name == "duality") {
      rows.push_back({"type", "self-dual when", "d(lambda) mod 2"});
      for (const auto& r : p.at("rows")) {
        rows.push_back({r.at("type"), r.at("self_dual"), r.at("d_parity")});
      }
    } else if (name == "typeE") {
      rows.push_back({"type", "weight", "verdict"});
      for (const auto& r : p.at("rows")) rows.push_back({r.at("type"), r.at("weight"), r.at("verdict")});
    } else {
      rows.push_back({"family", "range", "not orthogonal at"});
      for (const auto& r : p.at("rows")) {
        std::ostringstream at;
        for (int x : r.at("non_orthogonal")) at << (at.tellp() > 0 ? " " : "") << x;
        const std::string par = r.at("parameter");
        rows.push_back({r.at("family"),
                        par + "=" + std::to_string(r.at("first").get<int>()) + ".." +
                            std::to_string(r.at("last").get<int>()),
                        at.str()});
      }
    }
    print_table(out, rows);
  }
}

}  // namespace

Weight parse_weight(const std::string& text, int rank) {
  std::vector<int> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("weight coefficient '" + item + "' is not an integer");
    }
    if (used != item.size()) throw InputError("weight coefficient '" + item + "' is not an integer");
    if (v < 0) throw InputError("weight coefficients must be non-negative");
    coeffs.push_back(v);
  }
  if (text.empty() || text.back() == ',') throw InputError("empty weight coefficient");
  if (static_cast<int>(coeffs.size()) != rank) {
    throw InputError("weight has " + std::to_string(coeffs.size()) + " coefficients, rank is " +
                     std::to_string(rank));
  }
  return Weight(std::move(coeffs));
}

std::vector<ExampleFamily> example_families(int max_param) {
  std::vector<ExampleFamily> out;
  auto add_c = [&](std::string name, int first, auto index_of) {
    ExampleFamily f{std::move(name), "l", first, max_param, {}};
    for (int l = first; l <= max_param; ++l) {
      const FormClass fc = classify(SimpleType(Family::C, l), Weight::fundamental(l, index_of(l)), 2);
      if (fc.verdict != Verdict::Orthogonal) f.non_orthogonal.push_back(l);
    }
    out.push_back(std::move(f));
  };
  add_c("C_l omega_2", 2, [](int) { return 2; });
  add_c("C_l omega_4", 4, [](int) { return 4; });
  add_c("C_l omega_l", 2, [](int l) { return l; });
  add_c("C_l omega_(l-1)", 2, [](int l) { return l - 1; });
  auto add_a = [&](std::string name, int k, int first) {
    ExampleFamily f{std::move(name), "n", first, max_param, {}};
    for (int n = first; n <= max_param; ++n) {
      std::vector<int> c(static_cast<std::size_t>(n - 1), 0);
      c[k - 1] += 1;
      c[n - k - 1] += 1;
      const FormClass fc = classify(SimpleType(Family::A, n - 1), Weight(c), 2);
      if (fc.verdict != Verdict::Orthogonal) f.non_orthogonal.push_back(n);
    }
    out.push_back(std::move(f));
  };
  add_a("SL_n omega_1 + omega_(n-1)", 1, 3);
  add_a("SL_n omega_2 + omega_(n-2)", 2, 5);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant bilinear and quadratic forms on irreducible modules"};
  app.name("forms");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print the result as JSON");

  auto* c = app.add_subcommand("classify", "Decide the invariant forms on L(lambda)");
  c->add_option("--type", o.type, "A, B, C, D, G2, F4, E6, E7 or E8")->required();
  c->add_option("--rank", o.rank, "Rank of the simple type")->required();
  c->add_option("--weight", o.weight, "Comma-separated coefficients c1,...,cN")->required();
  c->add_option("--char", o.p, "Field characteristic (0 or a prime)")->required();

  auto* f = app.add_subcommand("factors", "Composition factors of a Weyl module");
  auto* rs = app.add_subcommand("restrict", "Restriction of L to the next smaller group");
  for (auto* sub : {f, rs}) {
    sub->add_option("--family", o.family, "C (L(omega_r) of Sp_2l) or A (L(omega_r + omega_s) of SL_n)")->required();
    sub->add_option("--rank", o.rank, "l for family C");
    sub->add_option("--n", o.n, "n for family A");
    sub->add_option("--r", o.r, "Index r")->required();
    sub->add_option("--s", o.s, "Index s (family A)");
    sub->add_option("--char", o.p, "Prime characteristic")->required();
  }

  auto* sg = app.add_subcommand("symgroup", "Orthogonality of D^(n-r,r) in characteristic 2");
  sg->add_option("--n", o.n, "Degree of the symmetric group")->required();
  sg->add_option("--r", o.r, "Second row length")->required();

  auto* v = app.add_subcommand("verify", "Compare the lattice oracles with the closed form (characteristic 2)");
  v->add_option("--family", o.family, "C or A")->required();
  v->add_option("--rank", o.rank, "l for C; Lie rank n-1 for A");
  v->add_option("--n", o.n, "n for A (overrides --rank)");
  v->add_option("--index", o.index, "k in omega_k, or in omega_k + omega_(n-k)")->required();
  v->add_option("--oracle", o.oracle, "gram, solver or both");

  auto* t = app.add_subcommand("table", "Regenerate a reference table");
  t->add_option("--name", o.name, "duality, typeE or examplesC")->required();
  t->add_option("--max", o.max_param, "Largest l or n for examplesC");

  std::vector<std::string> argv_store{"forms"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kInputError;
  }

  try {
    QueryResult q;
    int code = exit_code::kDecided;
    if (c->parsed()) {
      q = do_classify(o);
      code = verdict_exit(parse_verdict(q.payload.at("verdict").get<std::string>()));
    } else if (f->parsed()) {
      q = do_factors(o);
    } else if (rs->parsed()) {
      q = do_restrict(o);
    } else if (sg->parsed()) {
      q = do_symgroup(o);
      code = verdict_exit(parse_verdict(q.payload.at("verdict").get<std::string>()));
    } else if (v->parsed()) {
      q = do_verify(o);
      if (!q.payload.at("agree").get<bool>()) code = exit_code::kDisagree;
    } else {
      q = do_table(o);
    }
    if (o.json) {
      out << q.to_json().dump(2) << '\n';
    } else {
      print_text(q, out);
    }
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_code::kInputError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return exit_code::kResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::kDisagree;
  }
}

}  // namespace invforms::cli
