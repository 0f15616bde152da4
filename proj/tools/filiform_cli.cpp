#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "filiform/catalog.hpp"
#include "filiform/extend_classify.hpp"
#include "filiform/filtration.hpp"
#include "filiform/io.hpp"
#include "filiform/spectral.hpp"
#include "filiform/structures.hpp"

using namespace filiform;
using io::json;

namespace {

struct Report {
  json command;
  std::string digest;
  json result = json::object();
  std::ostringstream text;
  int code = 0;

  json to_json() const { return {{"command", command}, {"input_digest", digest}, {"result", result}, {"text", text.str()}}; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LieAlgebra<Q> load(const std::string& path, Report& rep) {
  std::string bytes = slurp(path);
  rep.digest = io::digest(bytes);
  return io::algebra_from_json(io::parse(bytes));
}

json forms_json(const std::vector<Form<Q>>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(io::to_json(f));
  return a;
}

std::string dims_text(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

json search_json(const SearchCertificate& c) {
  json j{{"method", c.method}, {"points_tried", c.points_tried}, {"grid_size", c.grid_size}, {"grid_limit", c.grid_limit}, {"complete", c.complete}};
  if (c.point) {
    json p = json::array();
    for (const auto& q : *c.point) p.push_back(io::to_json(q));
    j["point"] = p;
  }
  if (!c.polynomial.empty()) j["polynomial"] = c.polynomial;
  return j;
}

std::string search_text(const SearchCertificate& c) {
  std::string s = c.method + ", " + std::to_string(c.points_tried) + " points";
  if (c.method == "grid") s += " of " + std::to_string(c.grid_size);
  if (c.method == "symbolic") s += ", polynomial " + (c.polynomial.size() > 80 ? c.polynomial.substr(0, 77) + "..." : c.polynomial);
  if (c.complete) s += ", exhaustive";
  return s;
}

void cmd_check(const std::string& path, Report& rep) {
  auto g = load(path, rep);
  const int n = g.dim();
  auto bad = jacobi_check(g);
  json defects = json::array();
  for (const auto& v : bad) {
    json d = json::array();
    for (const auto& [k, c] : v.defect) d.push_back(json::array({k + 1, io::to_json(c)}));
    defects.push_back({{"triple", {v.i, v.j, v.k}}, {"defect", d}});
  }
  rep.result["dim"] = n;
  rep.result["jacobi"] = bad.empty();
  rep.result["jacobi_defects"] = defects;
  rep.text << "dim " << n << "\n";
  if (!bad.empty()) {
    rep.text << "Jacobi fails at " << bad.size() << " triple(s)\n";
    for (const auto& v : bad) {
      rep.text << "  (e" << v.i << ", e" << v.j << ", e" << v.k << "): ";
      std::string s;
      for (const auto& [k, c] : v.defect) s += (s.empty() ? "" : " + ") + c.pretty() + " e" + std::to_string(k + 1);
      rep.text << s << "\n";
    }
    rep.code = 1;
    return;
  }
  auto cs = central_series_dims(g);
  const bool nil = is_nilpotent(g), fil = is_filiform(g);
  rep.result["central_series_dims"] = cs;
  rep.result["nilpotent"] = nil;
  rep.result["filiform"] = fil;
  rep.text << "Jacobi holds\ncentral series dims " << dims_text(cs) << "\n";
  std::string status;
  if (!nil)
    status = "not nilpotent";
  else if (!fil)
    status = "nilpotent, not filiform";
  else if (is_graded_filiform(g))
    status = "N-graded filiform with weights 1..n";
  else
    status = "filiform, not N-graded-with-weights-1..n";
  rep.result["status"] = status;
  rep.text << status << "\n";
  if (fil) {
    auto ab = adapted_basis(g);
    rep.result["adapted_alpha"] = io::to_json(ab.alpha);
    rep.text << "adapted basis alpha " << ab.alpha.pretty() << "\n";
  }
}

void cmd_cohomology(const std::string& path, int p, std::optional<int> weight, Report& rep) {
  auto g = load(path, rep);
  if (p < 0 || p > g.dim()) throw Error(ErrorCode::InvalidInput, "degree must lie in 0..dim");
  auto blk = cohomology(g, p, weight);
  rep.result["degree"] = p;
  rep.result["weight"] = weight ? json(*weight) : json(nullptr);
  rep.result["weights"] = g.weights() ? "given" : "default e^i -> i";
  rep.result["dim"] = blk.dim;
  rep.result["cocycles"] = blk.cocycle_dim;
  rep.result["coboundaries"] = blk.coboundary_dim;
  rep.result["representatives"] = forms_json(blk.representatives);
  rep.text << "H^" << p;
  if (weight) rep.text << "_(" << *weight << ")";
  rep.text << ": dim " << blk.dim << " (cocycles " << blk.cocycle_dim << ", coboundaries " << blk.coboundary_dim << ")\n";
  for (const auto& f : blk.representatives) rep.text << "  " << io::form_text(f) << "\n";
  if (p == 2 && is_filiform(g)) {
    int r = filiform_extension_rank(g, blk);
    rep.result["filiform_extension_rank"] = r;
    rep.text << "filiform part (rank of c -> c(., e_" << g.dim() << ") on the cocycles): " << r << "\n";
  }
}

std::string relations(const LieAlgebra<QX>& a) {
  std::string s;
  for (const auto& [ab, v] : a.table()) {
    if (ab.first == 0) continue;
    for (const auto& [k, c] : v) {
      std::string cs = c.to_string("alpha");
      s += (s.empty() ? "" : ", ") + std::string("[e") + std::to_string(ab.first + 1) + ",e" + std::to_string(ab.second + 1) + "]=" +
           (cs == "1" ? "" : "(" + cs + ")") + "e" + std::to_string(k + 1);
    }
  }
  return s.empty() ? "-" : s;
}

void cmd_classify(int n, Report& rep) {
  if (n < 3 || n > 20) throw Error(ErrorCode::InvalidInput, "--dim must lie in 3..20");
  auto classes = enumerate_graded_filiform(n);
  json arr = json::array();
  int points = 0, families = 0;
  rep.text << "N-graded filiform Lie algebras of dimension " << n << "\n";
  rep.text << std::left << std::setw(18) << "class" << std::setw(8) << "tag" << std::setw(10) << "kind" << std::setw(22) << "excluded alpha"
           << "relations [e_i,e_j], i >= 2\n";
  for (const auto& c : classes) {
    json j{{"name", c.name}, {"tag", c.tag}, {"family", c.family}, {"origin", c.origin}};
    if (c.parameter) j["parameter"] = io::to_json(*c.parameter);
    json ex = json::array();
    std::string exs;
    for (const auto& a : c.excluded_alpha) {
      ex.push_back(io::to_json(a));
      exs += (exs.empty() ? "" : ",") + a.pretty();
    }
    j["excluded_alpha"] = ex;
    j["excluded_reason"] = c.excluded_reason;
    std::string rel;
    if (c.family && c.tag == "g") {
      rel = relations(catalog::g_family<QX>(n, QX::x()));
    } else if (c.family) {
      rel = relations(*c.rep_b);
    } else {
      rel = relations(c.representative.map_scalars<QX>([](const Q& q) { return QX(q); }));
      j["representative"] = io::to_json(c.representative);
    }
    j["relations"] = rel;
    (c.family ? families : points)++;
    arr.push_back(j);
    rep.text << std::left << std::setw(18) << c.name << std::setw(8) << c.tag << std::setw(10) << (c.family ? "family" : "point") << std::setw(22)
             << (exs.empty() ? "-" : exs) << rel << "\n";
  }
  rep.result["dim"] = n;
  rep.result["classes"] = arr;
  rep.result["points"] = points;
  rep.result["families"] = families;
  rep.text << points << " point class(es)" << (families ? " + " + std::to_string(families) + " family" : std::string()) << "\n";
}

void cmd_symplectic(const std::string& path, Report& rep) {
  auto g = load(path, rep);
  auto c = symplectic_exists(g);
  rep.result["exists"] = c.exists;
  rep.result["reason"] = reason_name(c.reason);
  rep.result["path"] = c.path;
  rep.result["detail"] = c.detail;
  rep.result["search"] = search_json(c.search);
  if (c.generic_agrees) rep.result["generic_agrees"] = *c.generic_agrees;
  rep.text << "symplectic structure: " << (c.exists ? "exists" : "does not exist") << " (" << c.path << " path)\n";
  if (c.exists) {
    rep.result["form"] = io::to_json(c.form);
    rep.result["top_power"] = io::to_json(c.top_power);
    rep.text << "omega = " << io::form_text(c.form) << "\nomega^" << g.dim() / 2 << " = " << io::form_text(c.top_power) << "\n";
  } else {
    rep.text << "reason " << reason_name(c.reason) << ": " << c.detail << "\n";
  }
  if (c.survival && !c.survival->survives) {
    rep.result["obstruction_page"] = c.survival->page;
    rep.result["obstruction_classes"] = forms_json(c.survival->classes);
    rep.result["obstruction_images"] = forms_json(c.survival->images);
    for (std::size_t i = 0; i < c.survival->classes.size(); ++i)
      rep.text << "  d_" << c.survival->page << " [" << io::form_text(c.survival->classes[i]) << "] = [" << io::form_text(c.survival->images[i]) << "]\n";
  }
  rep.text << "search: " << search_text(c.search) << "\n";
}

void cmd_contact(const std::string& path, Report& rep) {
  auto g = load(path, rep);
  auto s = contact_search(g);
  rep.result["exists"] = s.exists;
  rep.result["search"] = search_json(s.search);
  rep.text << "contact structure: " << (s.exists ? "exists" : "does not exist") << "\n";
  if (s.certificate) {
    rep.result["form"] = io::to_json(s.certificate->form);
    rep.result["volume"] = io::to_json(s.certificate->volume);
    rep.text << "beta = " << io::form_text(s.certificate->form) << "\nbeta^(d beta)^" << (g.dim() - 1) / 2 << " = "
             << io::form_text(s.certificate->volume) << "\n";
  }
  rep.text << "search: " << search_text(s.search) << "\n";
}

void cmd_spectral(const std::string& path, bool report, int r_max, Report& rep) {
  auto g = load(path, rep);
  if (!is_filiform(g)) throw Error(ErrorCode::NotFiliform, "the spectral sequence needs a filiform algebra");
  auto ab = adapted_basis(g);
  if (!ab.alpha.is_zero()) throw Error(ErrorCode::AlphaNonzero, "the filtration L is defined only for alpha = 0");
  SpectralSequence ss(g, ab.change);
  auto gl = gr_L(g, ab.change);
  rep.result["gr_L"] = io::to_json(gl.algebra());
  rep.result["max_span"] = ss.max_span();
  json pj = json::array();
  if (report) {
    auto pages = build_pages(ss, r_max);
    for (const auto& pg : pages) {
      json dims = json::array();
      for (const auto& [pq, d] : pg.dims)
        if (d) dims.push_back({pq.first, pq.second, d});
      json totals = json::array();
      for (int m = 0; m <= g.dim(); ++m) totals.push_back(pg.total(m));
      json diffs = json::array();
      for (const auto& [pq, dm] : pg.differentials)
        if (rank(dm)) diffs.push_back({{"from", {pq.first, pq.second}}, {"rank", rank(dm)}});
      pj.push_back({{"r", pg.r}, {"dims", dims}, {"totals", totals}, {"nonzero_differentials", diffs}});
      const bool same = &pg != &pages.front() && (&pg - 1)->dims == pg.dims;
      if (same && &pg != &pages.back()) continue;
      if (same) {
        rep.text << "E_" << pg.r << " = E_infinity, unchanged since the previous printed page\n";
        continue;
      }
      rep.text << "E_" << pg.r << (&pg == &pages.back() ? " = E_infinity" : "") << "   totals by degree: ";
      for (int m = 0; m <= g.dim(); ++m) rep.text << pg.total(m) << (m < g.dim() ? " " : "\n");
      for (int m = 0; m <= g.dim(); ++m) {
        std::string row;
        for (const auto& [pq, d] : pg.dims)
          if (d && pq.first + pq.second == m) row += " (" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "):" + std::to_string(d);
        if (!row.empty()) rep.text << "  m=" << m << row << "\n";
      }
      for (const auto& [pq, dm] : pg.differentials)
        if (rank(dm)) rep.text << "  d_" << pg.r << " out of (" << pq.first << "," << pq.second << ") has rank " << rank(dm) << "\n";
    }
    rep.result["pages"] = pj;
  }
  if (g.dim() % 2 == 0) {
    try {
      auto s = symplectic_survival(g, ab.change);
      json sv{{"survives", s.survives}, {"page", s.page}, {"classes", forms_json(s.classes)}};
      if (s.survives) {
        sv["lift"] = io::to_json(*s.lift);
        rep.text << "top symplectic class survives to E_infinity (page " << s.page << ")\nlift omega = " << io::form_text(*s.lift) << "\n";
      } else {
        sv["images"] = forms_json(s.images);
        rep.text << "top symplectic classes die on page " << s.page << "\n";
        for (std::size_t i = 0; i < s.classes.size(); ++i)
          rep.text << "  d_" << s.page << " [" << io::form_text(s.classes[i]) << "] = [" << io::form_text(s.images[i]) << "]\n";
      }
      rep.result["survival"] = sv;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GrLNotSymplectic) throw;
      rep.result["survival"] = {{"survives", false}, {"reason", "GrLNotSymplectic"}};
      rep.text << "gr_L carries no symplectic class of top weight\n";
    }
  }
}

void cmd_catalog(const std::string& name, const CatalogParams& p, const std::string& emit, Report& rep) {
  if (name.empty()) {
    rep.result["names"] = catalog_names();
    for (const auto& s : catalog_names()) rep.text << s << "\n";
    return;
  }
  auto g = build(name, p);
  json a = io::to_json(g);
  rep.result["algebra"] = a;
  rep.text << name << ": dim " << g.dim() << ", " << g.table().size() << " nonzero brackets\n";
  if (!emit.empty()) {
    io::write_text(emit, io::render(a) + "\n");
    rep.text << "wrote " << emit << "\n";
  }
}

int exit_code(const Error& e) { return e.code() == ErrorCode::InvariantViolation ? 2 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filiform Lie algebras: cohomology, classification, symplectic and contact structures"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "print the JSON report");

  std::string path;
  auto* check = app.add_subcommand("check", "Jacobi identity, nilpotency, filiform test");
  check->add_option("algebra", path, "interchange JSON")->required();

  int degree = 2;
  std::optional<int> weight;
  auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology");
  coh->add_option("algebra", path, "interchange JSON")->required();
  coh->add_option("--degree", degree, "form degree")->required();
  coh->add_option("--weight", weight, "weight block");

  int dim = 0;
  auto* cls = app.add_subcommand("classify-graded", "enumerate N-graded filiform algebras");
  cls->add_option("--dim", dim, "dimension")->required();

  auto* sym = app.add_subcommand("symplectic", "decide existence of a symplectic form");
  sym->add_option("algebra", path, "interchange JSON")->required();
  auto* con = app.add_subcommand("contact", "decide existence of a contact form");
  con->add_option("algebra", path, "interchange JSON")->required();

  bool report = false;
  int r_max = -1;
  auto* spec = app.add_subcommand("spectral", "spectral sequence of the filtration L");
  spec->add_option("algebra", path, "interchange JSON")->required();
  spec->add_flag("--report", report, "print the pages");
  spec->add_option("--max-page", r_max, "last page to compute");

  std::string name, emit, alphas;
  std::optional<int> n_opt, k_opt, t_opt;
  std::string alpha_s, beta_s;
  auto* cat = app.add_subcommand("catalog", "build a catalog algebra");
  cat->add_option("--name", name, "catalog name (omit to list)");
  cat->add_option("--dim", n_opt, "dimension");
  cat->add_option("--k", k_opt, "index k");
  cat->add_option("--t", t_opt, "shift t");
  cat->add_option("--alpha", alpha_s, "parameter alpha (num/den)");
  cat->add_option("--beta", beta_s, "parameter beta (num/den)");
  cat->add_option("--alphas", alphas, "comma-separated parameters");
  cat->add_option("--emit", emit, "write the interchange JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  Report rep;
  rep.command = json::array();
  for (int i = 1; i < argc; ++i) rep.command.push_back(argv[i]);
  try {
    if (*check) cmd_check(path, rep);
    if (*coh) cmd_cohomology(path, degree, weight, rep);
    if (*cls) cmd_classify(dim, rep);
    if (*sym) cmd_symplectic(path, rep);
    if (*con) cmd_contact(path, rep);
    if (*spec) cmd_spectral(path, report, r_max, rep);
    if (*cat) {
      CatalogParams p;
      p.n = n_opt;
      p.k = k_opt;
      p.t = t_opt;
      if (!alpha_s.empty()) p.alpha = Rational::parse(alpha_s);
      if (!beta_s.empty()) p.beta = Rational::parse(beta_s);
      std::stringstream ss(alphas);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) p.alphas.push_back(Rational::parse(item));
      cmd_catalog(name, p, emit, rep);
    }
  } catch (const Error& e) {
    rep.result = {{"error", error_name(e.code())}, {"message", e.what()}};
    rep.text << e.what() << "\n";
    rep.code = exit_code(e);
  } catch (const std::exception& e) {
    rep.result = {{"error", "InvariantViolation"}, {"message", e.what()}};
    rep.text << "internal error: " << e.what() << "\n";
    rep.code = 2;
  }
  if (as_json)
    std::cout << io::render(rep.to_json()) << "\n";
  else
    (rep.code ? std::cerr : std::cout) << rep.text.str();
  return rep.code;
}
