// abid: abelian ideals of a Borel subalgebra, their normalisers and
// Z-gradings, with an exhaustive verification harness.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abid/gradings.hpp"
#include "abid/ideals.hpp"
#include "abid/normalisers.hpp"
#include "abid/root_system.hpp"
#include "abid/verify.hpp"
#include "abid/weyl.hpp"

using namespace abid;
using nlohmann::json;

namespace {

struct Options {
  std::string type_spec = "all:rank<=8";
  std::string format = "markdown";
  std::string numbering = "bourbaki";
  std::string output;
  uint64_t seed = 0;
  int sample = 10000;
  int exhaustive_rank = 4;
};

std::vector<SimpleType> parse_type_spec(const std::string& spec) {
  std::vector<SimpleType> out;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token == "all" || token.rfind("all:rank<=", 0) == 0) {
      int max_rank = 8;
      if (token != "all") max_rank = std::stoi(token.substr(10));
      for (SimpleType t : canonical_types(max_rank)) out.push_back(t);
      continue;
    }
    auto dots = token.find("..");
    if (dots != std::string::npos) {
      SimpleType from = SimpleType::parse(token.substr(0, dots));
      SimpleType to = SimpleType::parse(token.substr(dots + 2));
      auto all = canonical_types(std::max({8, from.rank, to.rank}));
      auto i0 = std::find(all.begin(), all.end(), from);
      auto i1 = std::find(all.begin(), all.end(), to);
      if (i0 == all.end() || i1 == all.end() || i1 < i0)
        throw std::invalid_argument("bad type range '" + token + "'");
      out.insert(out.end(), i0, i1 + 1);
      continue;
    }
    out.push_back(SimpleType::parse(token));
  }
  if (out.empty()) throw std::invalid_argument("empty type spec '" + spec + "'");
  return out;
}

SimpleType single_type(const Options& opt) {
  auto types = parse_type_spec(opt.type_spec);
  if (types.size() != 1)
    throw std::invalid_argument("this subcommand needs exactly one --type");
  return types[0];
}

// Paper-vs-Bourbaki E6 relabelling at the CLI boundary.
struct Numbering {
  bool active = false;  // paper-e6 and the type is E6

  int to_internal(int i) const { return active ? paper_e6_to_bourbaki()[i] : i; }
  int to_display(int i) const { return active ? bourbaki_to_paper_e6()[i] : i; }
  Coeffs coeffs_to_internal(const Coeffs& c) const {
    if (!active) return c;
    Coeffs out(c.size());
    for (int p = 1; p <= 6; ++p) out[paper_e6_to_bourbaki()[p] - 1] = c[p - 1];
    return out;
  }
  Coeffs coeffs_to_display(const Coeffs& c) const {
    if (!active) return c;
    Coeffs out(c.size());
    for (int p = 1; p <= 6; ++p) out[p - 1] = c[paper_e6_to_bourbaki()[p] - 1];
    return out;
  }
  std::vector<int> word_to_display(const std::vector<int>& letters) const {
    if (!active) return letters;
    std::vector<int> out;
    for (int l : letters) out.push_back(l == 0 ? 0 : bourbaki_to_paper_e6()[l]);
    return out;
  }
};

Numbering numbering_for(const Options& opt, const RootSystem& rs) {
  if (opt.numbering == "bourbaki") return {};
  if (opt.numbering != "paper-e6")
    throw std::invalid_argument("unknown numbering '" + opt.numbering + "'");
  return Numbering{rs.type() == SimpleType{Family::E, 6}};
}

int parse_root(const RootSystem& rs, const Numbering& nb, const std::string& spec) {
  auto bad = [&] {
    return std::invalid_argument("cannot parse root token '" + spec + "'");
  };
  if (spec.empty()) throw bad();
  if (spec == "theta") return rs.theta();
  if (spec[0] == 'a' || spec[0] == 'A') {
    int i = std::atoi(spec.c_str() + 1);
    if (i < 1 || i > rs.rank()) throw bad();
    return rs.simple(nb.to_internal(i));
  }
  Coeffs c;
  if (spec.find(',') != std::string::npos) {
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) c.push_back(std::stoi(part));
  } else {
    for (char ch : spec) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
      c.push_back(ch - '0');
    }
  }
  if (static_cast<int>(c.size()) != rs.rank()) throw bad();
  int idx = rs.index_of(nb.coeffs_to_internal(c));
  if (idx < 0) throw std::invalid_argument("token '" + spec + "' is not a positive root");
  return idx;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad integer token '" + part + "'");
    out.push_back(v);
  }
  return out;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::string path = opt.output;
  const char* dir = std::getenv("ABID_OUTPUT_DIR");
  if (dir && *dir && path.front() != '/') path = std::string(dir) + "/" + path;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output path '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string render_table(const Options& opt, const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  if (opt.format == "csv") {
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return out.str();
  }
  out << "|";
  for (const auto& h : header) out << " " << h << " |";
  out << "\n|";
  for (size_t i = 0; i < header.size(); ++i) out << "---|";
  out << "\n";
  for (const auto& row : rows) {
    out << "|";
    for (const auto& cell : row) out << " " << cell << " |";
    out << "\n";
  }
  return out.str();
}

std::string join(const std::vector<int>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// ---- subcommands -----------------------------------------------------------

int cmd_list(const Options& opt) {
  auto types = parse_type_spec(opt.type_spec);
  json all = json::array();
  std::vector<std::vector<std::string>> rows;
  for (SimpleType t : types) {
    RootSystem rs(t);
    Numbering nb = numbering_for(opt, rs);
    auto fib = fibers(rs);
    for (const AbelianIdeal& a : enumerate_abelian(rs)) {
      std::optional<int> mu;
      bool is_min = false, is_max = false;
      if (a.any()) {
        mu = rootlet(rs, a);
        const Fiber& f = fib.at(*mu);
        is_min = a == f.min_ideal;
        is_max = a == f.max_ideal;
      }
      json rec = ideal_json(rs, a, mu, is_min, is_max);
      rec["type_id"] = t.name();
      if (mu) rec["rootlet"] = nb.coeffs_to_display(rs.root(*mu));
      all.push_back(rec);
      std::string roots;
      for (int g : a.indices()) {
        if (!roots.empty()) roots += " ";
        roots += rs.coeff_string(nb.coeffs_to_display(rs.root(g)));
      }
      std::string role;
      if (is_min) role += "min";
      if (is_max) role += role.empty() ? "max" : "+max";
      rows.push_back({t.name(), std::to_string(a.count()),
                      roots.empty() ? "-" : roots,
                      mu ? rs.coeff_string(nb.coeffs_to_display(rs.root(*mu))) : "-",
                      role.empty() ? "-" : role,
                      join(a.indices(), ";")});
    }
  }
  if (opt.format == "json")
    emit(opt, all.dump(2));
  else
    emit(opt, render_table(opt, {"type", "dim", "roots", "rootlet", "fiber role", "indices"},
                           rows));
  return 0;
}

int cmd_fiber(const Options& opt, const std::string& rootlet_spec) {
  RootSystem rs(single_type(opt));
  Numbering nb = numbering_for(opt, rs);
  int mu = parse_root(rs, nb, rootlet_spec);
  if (!rs.is_long(mu))
    throw std::invalid_argument("token '" + rootlet_spec + "' is not a long root");
  auto fib = fibers(rs);
  const Fiber& f = fib.at(mu);
  json out;
  out["type_id"] = rs.type().name();
  out["rootlet"] = nb.coeffs_to_display(rs.root(mu));
  out["ideals"] = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const AbelianIdeal& a : f.ideals) {
    out["ideals"].push_back(
        ideal_json(rs, a, mu, a == f.min_ideal, a == f.max_ideal));
    std::string roots;
    for (int g : a.indices()) {
      if (!roots.empty()) roots += " ";
      roots += rs.coeff_string(nb.coeffs_to_display(rs.root(g)));
    }
    std::string role = a == f.min_ideal ? "min" : "";
    if (a == f.max_ideal) role += role.empty() ? "max" : "+max";
    rows.push_back({std::to_string(a.count()), roots, role.empty() ? "-" : role});
  }
  if (opt.format == "json")
    emit(opt, out.dump(2));
  else
    emit(opt, render_table(opt, {"dim", "roots", "fiber role"}, rows));
  return 0;
}

int cmd_normaliser(const Options& opt, const std::string& ideal_spec, bool roots_as_coeffs,
                   const std::string& method_name_opt) {
  RootSystem rs(single_type(opt));
  Numbering nb = numbering_for(opt, rs);
  RootSet ideal;
  if (roots_as_coeffs) {
    std::stringstream ss(ideal_spec);
    std::string part;
    while (std::getline(ss, part, ';'))
      if (!part.empty()) ideal.set(parse_root(rs, nb, part));
  } else {
    for (int idx : parse_int_list(ideal_spec)) {
      if (idx < 0 || idx >= rs.size())
        throw std::invalid_argument("root index '" + std::to_string(idx) + "' out of range");
      ideal.set(idx);
    }
  }
  if (!is_upper_ideal(rs, ideal))
    throw std::invalid_argument("the given set is not an upper ideal (not upward closed)");

  std::vector<NormaliserMethod> methods;
  if (method_name_opt.empty()) {
    methods = {NormaliserMethod::bracket, NormaliserMethod::via_min};
    RootSet full;
    for (int g = 0; g < rs.size(); ++g) full.set(g);
    if (!(ideal == full)) methods.push_back(NormaliserMethod::via_max);
    if (is_abelian_ideal(rs, ideal)) methods.push_back(NormaliserMethod::minuscule);
  } else {
    methods = {parse_method(method_name_opt)};
  }
  SimpleSubset levi = normaliser(rs, ideal, methods.front());
  bool agreed = true;
  for (NormaliserMethod m : methods)
    if (normaliser(rs, ideal, m) != levi) agreed = false;

  json rec = normaliser_json(rs, ideal, levi, agreed);
  rec["type_id"] = rs.type().name();
  rec["methods"] = json::array();
  for (NormaliserMethod m : methods) rec["methods"].push_back(method_name(m));
  if (opt.format == "json") {
    emit(opt, rec.dump(2));
  } else {
    std::vector<int> levi_disp, excl_disp;
    for (int i : levi.as_levi(rs.rank()).indices()) levi_disp.push_back(nb.to_display(i));
    for (int i : levi.as_excluded(rs.rank()).indices()) excl_disp.push_back(nb.to_display(i));
    std::sort(levi_disp.begin(), levi_disp.end());
    std::sort(excl_disp.begin(), excl_disp.end());
    emit(opt, render_table(opt, {"levi simples", "excluded simples", "methods agreed"},
                           {{join(levi_disp, " "), join(excl_disp, " "),
                             agreed ? "yes" : "no"}}));
  }
  return 0;
}

int cmd_mover(const Options& opt, const std::string& root_spec) {
  RootSystem rs(single_type(opt));
  Numbering nb = numbering_for(opt, rs);
  int mu = parse_root(rs, nb, root_spec);
  std::vector<int> priority;
  if (nb.active)
    for (int p = 1; p <= 6; ++p) priority.push_back(paper_e6_to_bourbaki()[p]);
  WeylWord w = minimal_mover(rs, mu, priority);
  WeylWord shown{nb.word_to_display(w.letters)};
  if (opt.format == "json") {
    json out;
    out["type_id"] = rs.type().name();
    out["root"] = nb.coeffs_to_display(rs.root(mu));
    out["word"] = shown.str();
    out["length"] = w.length();
    emit(opt, out.dump(2));
  } else {
    emit(opt, shown.str());
  }
  return 0;
}

int cmd_grading(const Options& opt, const std::string& support_spec, int tail_j) {
  RootSystem rs(single_type(opt));
  Numbering nb = numbering_for(opt, rs);
  SimpleSubset s;
  s.as = SimpleSubset::As::excluded;
  for (int i : parse_int_list(support_spec)) {
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument("simple index '" + std::to_string(i) + "' out of range");
    s.add(nb.to_internal(i));
  }
  Grading g = grading(rs, s);
  json out;
  out["type_id"] = rs.type().name();
  out["support"] = [&] {
    std::vector<int> disp;
    for (int i : s.indices()) disp.push_back(nb.to_display(i));
    std::sort(disp.begin(), disp.end());
    return disp;
  }();
  out["height"] = g.height;
  out["degrees"] = json::array();
  for (int r = 0; r < rs.size(); ++r)
    out["degrees"].push_back(
        {{"root", nb.coeffs_to_display(rs.root(r))}, {"degree", g.degree[r]}});
  if (tail_j >= 1) {
    RootSet t = tail(rs, s, tail_j);
    out["tail_j"] = tail_j;
    out["tail"] = t.indices();
    out["tail_is_abelian"] = is_abelian_ideal(rs, t);
  }
  if (opt.format == "json") {
    emit(opt, out.dump(2));
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (int r = 0; r < rs.size(); ++r)
    rows.push_back({rs.coeff_string(nb.coeffs_to_display(rs.root(r))),
                    std::to_string(g.degree[r])});
  std::string text = "height: " + std::to_string(g.height) + "\n";
  if (tail_j >= 1) {
    RootSet t = tail(rs, s, tail_j);
    text += "tail(" + std::to_string(tail_j) + "): ";
    for (int idx : t.indices()) text += rs.coeff_string(nb.coeffs_to_display(rs.root(idx))) + " ";
    text += is_abelian_ideal(rs, t) ? "(abelian)\n" : "(not abelian)\n";
  }
  emit(opt, text + render_table(opt, {"root", "degree"}, rows));
  return 0;
}

int cmd_maps(const Options& opt) {
  auto types = parse_type_spec(opt.type_spec);
  json out = json::array();
  std::string md = map_scan_markdown_header() + "\n";
  std::vector<std::vector<std::string>> rows;
  for (SimpleType t : types) {
    RootSystem rs(t);
    MapScanReport rep = scan_maps(rs);
    out.push_back(rep.json(rs));
    md += map_scan_markdown_row(rs, rep) + "\n";
    rows.push_back({t.name(), std::to_string(rep.image_f1_size),
                    std::to_string(rep.image_f2_size), std::to_string(rep.image_F_size),
                    std::to_string(rep.image_Ftilde_size),
                    std::to_string(rep.reflexive_ideals.size()),
                    rep.F_idempotent ? "yes" : "no", rep.Ftilde_idempotent ? "yes" : "no",
                    rep.images_mutually_bijective ? "yes" : "no",
                    rep.F_extensive ? "yes" : "no"});
  }
  if (opt.format == "json")
    emit(opt, out.dump(2));
  else if (opt.format == "csv")
    emit(opt, render_table(opt,
                           {"type", "im_f1", "im_f2", "im_F", "im_Ftilde", "reflexive_ideals",
                            "F_idempotent", "Ftilde_idempotent", "images_bijective",
                            "F_extensive"},
                           rows));
  else
    emit(opt, md);
  return 0;
}

int cmd_conjectures(const Options& opt) {
  auto types = parse_type_spec(opt.type_spec);
  json out = json::array();
  for (SimpleType t : types) {
    RootSystem rs(t);
    out.push_back(scan_maps(rs).json(rs));
  }
  if (opt.format == "markdown" || opt.format == "csv") return cmd_maps(opt);
  emit(opt, out.dump(2));
  return 0;
}

int cmd_verify(const Options& opt, const std::string& checks_csv) {
  auto types = parse_type_spec(opt.type_spec);
  VerifyConfig cfg{opt.seed, opt.sample, opt.exhaustive_rank};
  std::vector<CheckResult> results;
  if (checks_csv.empty()) {
    results = run_all(types, cfg);
  } else {
    std::stringstream ss(checks_csv);
    std::string id;
    std::vector<std::string> wanted;
    while (std::getline(ss, id, ','))
      if (!id.empty()) wanted.push_back(id);
    for (const std::string& w : wanted)
      if (std::find(check_ids().begin(), check_ids().end(), w) == check_ids().end())
        throw std::invalid_argument("unknown check id '" + w + "'");
    for (const std::string& w : wanted)
      for (SimpleType t : types) {
        RootSystem rs(t);
        results.push_back(run_check(w, rs, cfg));
      }
  }
  bool failed = any_theorem_failure(results);
  if (opt.format == "json") {
    emit(opt, report_json(results, cfg, types).dump(2));
  } else {
    std::string md = report_markdown(results);
    md += failed ? "\nverdict: FAIL\n" : "\nverdict: all theorem checks pass\n";
    emit(opt, md);
  }
  return failed ? 1 : 0;
}

int cmd_catalog(const Options& opt) {
  auto types = parse_type_spec(opt.type_spec);
  json out = json::array();
  for (SimpleType t : types) out.push_back(RootSystem(t).catalogue_json());
  emit(opt, out.size() == 1 ? out[0].dump(2) : out.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abelian ideals of a Borel subalgebra: enumeration, normalisers, gradings"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-t,--type", opt.type_spec,
                    "type spec: D4, A1..E8, all:rank<=8, or a comma list");
    sub->add_option("-f,--format", opt.format, "json | markdown | csv")
        ->check(CLI::IsMember({"json", "markdown", "csv"}));
    sub->add_option("--numbering", opt.numbering, "bourbaki | paper-e6")
        ->check(CLI::IsMember({"bourbaki", "paper-e6"}));
    sub->add_option("-o,--output", opt.output,
                    "output path (relative paths honour ABID_OUTPUT_DIR)");
    sub->add_option("--seed", opt.seed, "seed for sampled upper-ideal tests");
    sub->add_option("--sample", opt.sample, "upper-ideal samples per type above the bound");
    sub->add_option("--exhaustive-rank", opt.exhaustive_rank,
                    "exhaustive upper-ideal testing up to this rank");
  };

  auto* list = app.add_subcommand("list", "abelian ideals with rootlets, dims, fibre roles");
  add_common(list);

  auto* fiber = app.add_subcommand("fiber", "one rootlet fibre");
  std::string rootlet_spec;
  fiber->add_option("--rootlet", rootlet_spec, "long positive root (a2, theta, 1211, 1,2,1,1)")
      ->required();
  add_common(fiber);

  auto* norm = app.add_subcommand("normaliser", "normaliser of an upper ideal");
  std::string ideal_spec, method_opt;
  bool roots_as_coeffs = false;
  norm->add_option("--ideal", ideal_spec, "root indices in canonical order (see `list`)")
      ->required();
  norm->add_flag("--roots-as-coeffs", roots_as_coeffs,
                 "read --ideal as ';'-separated coefficient vectors");
  norm->add_option("--method", method_opt, "bracket | via_min | via_max | minuscule");
  add_common(norm);

  auto* mover = app.add_subcommand("mover", "w_mu, the minimal mover theta -> mu");
  std::string root_spec;
  mover->add_option("--root", root_spec, "long positive root")->required();
  add_common(mover);

  auto* grad = app.add_subcommand("grading", "Z-grading from a subset of Pi");
  std::string support_spec;
  int tail_j = 0;
  grad->add_option("--support", support_spec, "simple indices, e.g. 1,3,4")->required();
  grad->add_option("--tail", tail_j, "also print g(>=j)");
  add_common(grad);

  auto* maps = app.add_subcommand("maps", "scan of f1/f2 and their compositions");
  add_common(maps);

  auto* verify = app.add_subcommand("verify", "run the theorem checks");
  std::string checks_csv;
  verify->add_option("--checks", checks_csv, "comma list of check ids (default: all)");
  add_common(verify);

  auto* conj = app.add_subcommand("conjectures", "conjecture scan with witnesses");
  add_common(conj);

  auto* catalog = app.add_subcommand("catalog", "root catalogue as JSON");
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) return cmd_list(opt);
    if (fiber->parsed()) return cmd_fiber(opt, rootlet_spec);
    if (norm->parsed()) return cmd_normaliser(opt, ideal_spec, roots_as_coeffs, method_opt);
    if (mover->parsed()) return cmd_mover(opt, root_spec);
    if (grad->parsed()) return cmd_grading(opt, support_spec, tail_j);
    if (maps->parsed()) return cmd_maps(opt);
    if (verify->parsed()) return cmd_verify(opt, checks_csv);
    if (conj->parsed()) return cmd_conjectures(opt);
    if (catalog->parsed()) return cmd_catalog(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
