#include "recip_cli/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "recip/errors.hpp"

namespace recip::cli {

using nlohmann::json;

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "latex") return OutputFormat::kLatex;
  throw ValidationError(ValidationKind::kInvalidParameter, "unknown format '" + name + "'");
}

namespace {

json form_list(const std::vector<LinearForm>& forms) {
  json out = json::array();
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// RFC 4180 quoting, applied only when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': out += "\\_"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '#': out += "\\#"; break;
      default: out += c;
    }
  }
  return out;
}

std::string pair_subscript(VertexPair p, int n) {
  if (n <= 9) return std::to_string(p.i) + std::to_string(p.j);
  return std::to_string(p.i) + "," + std::to_string(p.j);
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

// Vertices and edges grouped by colour id: "c1: 1 2 3; c2: 12 23".
std::string colour_classes(const ColouredGraph& g) {
  std::map<int, std::vector<std::string>> classes;
  for (int v = 1; v <= g.n(); ++v) classes[g.vertex_colour(v)].push_back(std::to_string(v));
  for (const auto& e : g.edges()) classes[e.colour].push_back(pair_subscript({e.u, e.v}, g.n()));
  std::vector<std::string> parts;
  for (const auto& [c, members] : classes) parts.push_back("c" + std::to_string(c) + ": " + join(members, " "));
  return join(parts, "; ");
}

}  // namespace

std::string latex_form(const LinearForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) {
      out += mag.get_den() == 1 ? mag.get_num().get_str() : "\\tfrac{" + mag.get_num().get_str() + "}{" +
                                                                  mag.get_den().get_str() + "}";
    }
    out += "x_{" + pair_subscript(p, f.n()) + "}";
    first = false;
  }
  return out;
}

json graph_json(const ColouredGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (int v = 1; v <= g.n(); ++v) {
    doc["vertices"].push_back({{"id", v}, {"colour", "c" + std::to_string(g.vertex_colour(v))}});
  }
  doc["edges"] = json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"colour", "c" + std::to_string(e.colour)}});
  }
  return doc;
}

json analysis_json(const AnalysisReport& rep, bool timings) {
  const int n = rep.graph.n();
  json j;
  j["label"] = rep.label;
  j["n"] = n;
  j["colours"] = rep.graph.num_colours();
  j["uniform"] = rep.graph.is_uniform();
  j["graph"] = graph_json(rep.graph);
  j["components"] = rep.components;

  json gens = json::array();
  for (const auto& p : rep.group.generators) gens.push_back(p.to_string());
  j["automorphisms"] = {{"order", rep.group.order.get_str()}, {"generators", gens}};

  json orbits = json::array();
  for (const auto& orbit : rep.orbits.orbits) {
    json names = json::array();
    for (const auto& p : orbit) names.push_back(variable_name(p, n));
    orbits.push_back(names);
  }
  j["pair_orbits"] = orbits;
  j["symmetry_forms"] = form_list(rep.symmetry_forms);
  j["component_zeros"] = form_list(rep.component_zeros);
  j["determinant"] = rep.determinant.to_string();

  json pivots = json::array();
  for (const auto& p : rep.linear.pivots) pivots.push_back(variable_name(p, n));
  j["linear_part"] = {{"dimension", rep.linear.dimension()},
                      {"generators", form_list(rep.linear.basis)},
                      {"pivots", pivots}};

  if (rep.quadratic) {
    json reps = json::array();
    for (const auto& q : rep.quadratic->representatives) reps.push_back(q.to_string());
    j["quadratic_part"] = {{"full_dimension", rep.quadratic->full_dimension},
                           {"minimal_count", rep.quadratic->minimal_count},
                           {"generators", reps}};
  } else {
    j["quadratic_part"] = nullptr;
  }

  json binomials = json::array();
  for (const auto& b : rep.binomials) {
    binomials.push_back({{"form", b.form.to_string()}, {"induced", b.induced}, {"strict", b.strict}});
  }
  j["binomials"] = binomials;

  const auto& v = rep.verdict;
  j["symmetry"] = {{"s", v.s},
                   {"s_within_components", v.s_within_components},
                   {"dim_symmetry_span", v.dim_symmetry_span},
                   {"dim_with_component_zeros", v.dim_with_component_zeros},
                   {"dim_linear_part", v.dim_linear_part},
                   {"induced", v.induced},
                   {"extra_generators", form_list(v.extra_generators)},
                   {"r", v.r ? json(*v.r) : json(nullptr)},
                   {"s_equals_r", v.s_equals_r ? json(*v.s_equals_r) : json(nullptr)}};

  j["derived_graph"] = graph_json(rep.derived);
  const auto& a = rep.ambient;
  j["ambient"] = {{"dim_ambient", a.dim_ambient}, {"dim_L", a.dim_L},
                  {"dim_Lprime", a.dim_Lprime},   {"dim_Lperp", a.dim_Lperp},
                  {"dim_Lperp_prime", a.dim_Lperp_prime}, {"L_in_Lprime", a.L_in_Lprime},
                  {"span_full", a.span_full}};

  if (rep.pencil) {
    const auto& p = *rep.pencil;
    j["pencil"] = {{"r", p.r},
                   {"segre_symbol", rep.segre->to_string()},
                   {"deg_reciprocal", p.deg_reciprocal},
                   {"mld", p.mld},
                   {"rmld", p.rmld ? json(*p.rmld) : json(nullptr)},
                   {"n_linear_formula", p.n_linear},
                   {"n_quadratic_formula", p.n_quadratic},
                   {"r_equals_one", p.r_equals_one}};
  } else {
    j["pencil"] = nullptr;
  }
  if (timings) {
    json t = json::array();
    for (const auto& s : rep.timings) t.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
    j["timings"] = t;
  }
  return j;
}

json scan_json(const ScanResult& res, bool timings) {
  json examples = json::array();
  for (const auto& c : res.counterexamples) {
    examples.push_back({{"index", c.index}, {"subject", c.subject}, {"witness", c.witness}});
  }
  json j = {{"scan_id", res.scan_id},
            {"description", res.description},
            {"universe_size", res.universe_size},
            {"checked", res.checked},
            {"skipped", res.skipped},
            {"holds", res.holds()},
            {"strict_exceptions", res.strict_exceptions},
            {"counterexamples", examples}};
  if (timings) j["elapsed_seconds"] = res.elapsed_seconds;
  return j;
}

json verification_json(const FamilyVerification& v) {
  json clauses = json::array();
  for (const auto& c : v.clauses) clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"label", v.label},
          {"passed", v.passed()},
          {"r", v.r},
          {"s", v.s},
          {"expected_r", v.expected_r},
          {"expected_s", v.expected_s},
          {"closed_form_generators", form_list(v.closed_form_generators)},
          {"clauses", clauses}};
}

namespace {

json document(const char* kind, json items) {
  return {{"tool", "recip"}, {"kind", kind}, {"items", std::move(items)}};
}

void analysis_text(std::ostream& out, const AnalysisReport& rep, bool timings) {
  const int n = rep.graph.n();
  out << "graph " << rep.label << ": n = " << n << ", " << rep.graph.num_colours() << " colours"
      << (rep.graph.is_uniform() ? " (uniform)" : "") << "\n";
  out << "  colour classes: " << colour_classes(rep.graph) << "\n";
  out << "  components: " << rep.components.size() << "\n";
  std::vector<std::string> gens;
  for (const auto& p : rep.group.generators) gens.push_back(p.to_string());
  out << "  automorphisms: order " << rep.group.order.get_str()
      << (gens.empty() ? "" : ", generators " + join(gens, " ")) << "\n";
  out << "  pair orbits: s = " << rep.orbits.s() << "\n";
  out << "  determinant: " << rep.determinant.to_string() << "\n";
  out << "linear part: dimension " << rep.linear.dimension() << "\n";
  for (const auto& f : rep.linear.basis) out << "  " << f.to_string() << "\n";
  const auto& v = rep.verdict;
  out << "symmetry: span " << v.dim_symmetry_span << ", with component zeros " << v.dim_with_component_zeros
      << ", induced " << yes_no(v.induced) << "\n";
  for (const auto& f : v.extra_generators) out << "  extra " << f.to_string() << "\n";
  if (v.r) out << "  r = " << *v.r << ", s = " << v.s_within_components << ", r = s " << yes_no(*v.s_equals_r) << "\n";
  std::size_t unexplained = 0;
  for (const auto& b : rep.binomials) unexplained += b.induced ? 0 : 1;
  out << "binomials: " << rep.binomials.size() << ", not induced " << unexplained << "\n";
  for (const auto& b : rep.binomials) {
    if (!b.induced) out << "  " << b.form.to_string() << "\n";
  }
  if (rep.quadratic) {
    out << "quadratic part: dim I2 = " << rep.quadratic->full_dimension << ", minimal generators "
        << rep.quadratic->minimal_count << "\n";
    for (const auto& q : rep.quadratic->representatives) out << "  " << q.to_string() << "\n";
  }
  if (rep.pencil) {
    const auto& p = *rep.pencil;
    out << "pencil: r = " << p.r << ", Segre " << rep.segre->to_string() << ", deg " << p.deg_reciprocal
        << ", mld " << p.mld << ", rmld " << (p.rmld ? std::to_string(*p.rmld) : "-") << ", linear "
        << p.n_linear << ", quadratic " << p.n_quadratic << "\n";
  }
  out << "derived graph: " << colour_classes(rep.derived) << "\n";
  const auto& a = rep.ambient;
  out << "ambient: dim L = " << a.dim_L << ", dim L' = " << a.dim_Lprime << ", dim L^perp = " << a.dim_Lperp
      << ", dim (L^perp)' = " << a.dim_Lperp_prime << ", L in L' " << yes_no(a.L_in_Lprime) << ", span full "
      << yes_no(a.span_full) << "\n";
  if (timings) {
    for (const auto& s : rep.timings) out << "time " << s.stage << ": " << format_seconds(s.seconds) << " s\n";
  }
}

const char* const kAnalysisCsvHeader =
    "label,n,colours,uniform,aut_order,s,dim_linear,dim_symmetry_span,dim_with_component_zeros,induced,"
    "extra_generators,r,deg,mld,rmld,n_linear_formula,n_quadratic_formula,dim_I2,minimal_quadrics";

std::string analysis_csv_row(const AnalysisReport& rep) {
  const auto& v = rep.verdict;
  std::vector<std::string> cells{csv_field(rep.label),
                                 std::to_string(rep.graph.n()),
                                 std::to_string(rep.graph.num_colours()),
                                 rep.graph.is_uniform() ? "true" : "false",
                                 rep.group.order.get_str(),
                                 std::to_string(v.s),
                                 std::to_string(rep.linear.dimension()),
                                 std::to_string(v.dim_symmetry_span),
                                 std::to_string(v.dim_with_component_zeros),
                                 v.induced ? "true" : "false",
                                 std::to_string(v.extra_generators.size())};
  if (rep.pencil) {
    const auto& p = *rep.pencil;
    cells.insert(cells.end(), {std::to_string(p.r), std::to_string(p.deg_reciprocal), std::to_string(p.mld),
                               p.rmld ? std::to_string(*p.rmld) : "", std::to_string(p.n_linear),
                               std::to_string(p.n_quadratic)});
  } else {
    cells.insert(cells.end(), 6, "");
  }
  cells.push_back(rep.quadratic ? std::to_string(rep.quadratic->full_dimension) : "");
  cells.push_back(rep.quadratic ? std::to_string(rep.quadratic->minimal_count) : "");
  return join(cells, ",");
}

// Three columns: the graph, its linear generators (extras boxed), G'.
std::string analysis_latex(const std::vector<AnalysisReport>& reports) {
  std::ostringstream out;
  out << "\\begin{tabular}{|p{4cm}|p{6cm}|p{4cm}|}\n\\hline\n$G$ & Linear forms & $G'$ \\\\\n\\hline\n";
  for (const auto& rep : reports) {
    std::vector<std::string> forms;
    for (const auto& f : rep.linear.basis) forms.push_back("$" + latex_form(f) + "$");
    for (const auto& f : rep.verdict.extra_generators) forms.push_back("\\fbox{$" + latex_form(f) + "$}");
    out << latex_escape(rep.label) << ": " << latex_escape(colour_classes(rep.graph)) << " & "
        << (forms.empty() ? std::string("None.") : join(forms, ", ")) << " & "
        << latex_escape(colour_classes(rep.derived)) << " \\\\\n\\hline\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace

std::string render_analyses(const std::vector<AnalysisReport>& reports, const RenderOptions& options) {
  std::ostringstream out;
  switch (options.format) {
    case OutputFormat::kText:
      for (std::size_t k = 0; k < reports.size(); ++k) {
        if (k) out << "\n";
        analysis_text(out, reports[k], options.timings);
      }
      break;
    case OutputFormat::kJson: {
      json items = json::array();
      for (const auto& rep : reports) items.push_back(analysis_json(rep, options.timings));
      out << document("analysis", items).dump(2) << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << kAnalysisCsvHeader << "\n";
      for (const auto& rep : reports) out << analysis_csv_row(rep) << "\n";
      break;
    case OutputFormat::kLatex: out << analysis_latex(reports); break;
  }
  return out.str();
}

std::string render_scan(const ScanResult& res, const RenderOptions& options) {
  std::ostringstream out;
  switch (options.format) {
    case OutputFormat::kText:
      out << "scan " << res.scan_id << ": " << res.description << "\n";
      out << "  universe " << res.universe_size << ", checked " << res.checked << ", skipped " << res.skipped
          << "\n";
      out << "  counterexamples " << res.counterexamples.size() << ", strict exceptions " << res.strict_exceptions
          << "\n";
      for (const auto& c : res.counterexamples) {
        out << "  #" << c.index << " " << c.witness << " " << c.subject << "\n";
      }
      if (options.timings) out << "time: " << format_seconds(res.elapsed_seconds) << " s\n";
      out << (res.holds() ? "holds" : "fails") << "\n";
      break;
    case OutputFormat::kJson: out << document("scan", json::array({scan_json(res, options.timings)})).dump(2) << "\n"; break;
    case OutputFormat::kCsv:
      out << "scan_id,index,subject,witness\n";
      for (const auto& c : res.counterexamples) {
        out << csv_field(res.scan_id) << "," << c.index << "," << csv_field(c.subject) << "," << csv_field(c.witness)
            << "\n";
      }
      break;
    case OutputFormat::kLatex:
      out << "\\begin{tabular}{|r|l|l|}\n\\hline\nIndex & Witness & Subject \\\\\n\\hline\n";
      for (const auto& c : res.counterexamples) {
        out << c.index << " & \\texttt{" << latex_escape(c.witness) << "} & \\texttt{" << latex_escape(c.subject)
            << "} \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
  }
  return out.str();
}

std::string render_verifications(const std::vector<FamilyVerification>& results, const RenderOptions& options) {
  std::ostringstream out;
  switch (options.format) {
    case OutputFormat::kText:
      for (const auto& v : results) {
        out << (v.passed() ? "PASS " : "FAIL ") << v.label << ": r = " << v.r << ", s = " << v.s << "\n";
        for (const auto& c : v.clauses) {
          out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
        }
        for (const auto& f : v.closed_form_generators) out << "  extra " << f.to_string() << "\n";
      }
      break;
    case OutputFormat::kJson: {
      json items = json::array();
      for (const auto& v : results) items.push_back(verification_json(v));
      out << document("verification", items).dump(2) << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "label,passed,r,s,expected_r,expected_s,failed_clauses\n";
      for (const auto& v : results) {
        std::vector<std::string> failed;
        for (const auto& c : v.clauses) {
          if (!c.passed) failed.push_back(c.name);
        }
        out << csv_field(v.label) << "," << (v.passed() ? "true" : "false") << "," << v.r << "," << v.s << ","
            << v.expected_r << "," << v.expected_s << "," << csv_field(join(failed, ";")) << "\n";
      }
      break;
    case OutputFormat::kLatex:
      out << "\\begin{tabular}{|l|c|c|l|}\n\\hline\nFamily & $r$ & $s$ & Extra generators \\\\\n\\hline\n";
      for (const auto& v : results) {
        std::vector<std::string> forms;
        for (const auto& f : v.closed_form_generators) forms.push_back("$" + latex_form(f) + "$");
        out << latex_escape(v.label) << " & " << v.r << " & " << v.s << " & "
            << (forms.empty() ? std::string("None.") : join(forms, ", ")) << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
  }
  return out.str();
}

}  // namespace recip::cli
