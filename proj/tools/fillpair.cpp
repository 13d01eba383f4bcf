// Command-line front end: construct, verify, transform and render
// minimally intersecting coherent filling pairs and their origamis.
//
// Exit codes: 0 success, 1 semantic failure, 2 parse/usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fillpair/constructions.hpp"
#include "fillpair/io.hpp"

namespace {

using namespace fillpair;

std::string slurp(const std::string &path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spew(const std::string &path, const std::string &content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw error("cannot write '" + path + "'");
  out << content;
}

// Summaries go to stdout unless the document itself is on stdout.
std::ostream &summary_stream(const std::string &out_path) {
  return out_path == "-" ? std::cerr : std::cout;
}

void print_summary(std::ostream &os, const CurvePair &pair, bool minimal) {
  const SurfaceStats st = stats(pair);
  os << "n: " << st.crossings << "\n"
     << "faces: " << st.faces << "\n"
     << "genus: " << st.genus << "\n"
     << "punctures: " << st.punctures << "\n"
     << "coherent: yes\n"
     << "minimal: " << (minimal ? "yes" : "no") << "\n";
}

int cmd_construct(int genus, int punctures, const std::string &out_path) {
  if (genus == 2 && punctures == 0) {
    const Genus2Report report = genus2_search();
    std::cerr << "construct: no minimal filling pair exists for genus 2.\n"
              << "All " << report.candidates.size()
              << " one-handle attachments on the 2-crossing seed band a face "
                 "to itself:\n";
    for (const auto &cand : report.candidates)
      std::cerr << "  crossing " << cand.crossing << ", "
                << (cand.kind == SurgeryKind::SingleSWNE ? "single-swne"
                                                         : "single-nwse")
                << ": face " << cand.edge.first << " -- face "
                << cand.edge.second << " (self-loop)\n";
    std::cerr << "No attaching tree exists; genus 2 needs 4 crossings.\n";
    return 1;
  }
  if (genus < 3)
    throw error("construct: genus must be >= 3");
  if (punctures < 0)
    throw error("construct: puncture count must be >= 0");

  const Scheme scheme =
      punctures == 0 ? minimal_scheme(genus) : punctured_scheme(genus, punctures);
  const CurvePair pair =
      punctures == 0 ? minimal_closed(genus) : minimal_punctured(genus, punctures);

  // re-verify before reporting success
  const SurfaceStats st = stats(pair);
  const int expect_n = punctures == 0 ? 2 * genus - 1 : 2 * genus + punctures - 2;
  const int expect_f = punctures == 0 ? 1 : punctures;
  if (st.crossings != expect_n || st.faces != expect_f || st.genus != genus)
    throw error("construct: output failed verification");

  spew(out_path, write_pair(pair_document(pair, scheme_document(scheme))));
  print_summary(summary_stream(out_path), pair, true);
  return 0;
}

int cmd_verify(const std::string &path, bool expect_minimal) {
  const PairDocument doc = read_pair(slurp(path));
  const int n = doc.alpha_order.degree();

  const bool alpha_single = doc.alpha_order.is_full_cycle();
  const bool beta_single = doc.beta_order.is_full_cycle();
  std::cout << "n: " << n << "\n"
            << "alpha_single_curve: " << (alpha_single ? "yes" : "no") << "\n"
            << "beta_single_curve: " << (beta_single ? "yes" : "no") << "\n";
  if (!alpha_single || !beta_single) {
    std::cout << "coherent: no\n";
    return 1;
  }

  const CurvePair pair = to_curve_pair(doc);
  const std::vector<int> signs =
      doc.signs ? *doc.signs : std::vector<int>(n, 1);
  const CoherenceReport coherence = verify_coherent_import(pair, signs);
  const SurfaceStats st = stats(pair);
  const Origami origami = to_origami(pair);
  const SingularityProfile profile = singularities(pair);

  const int p = st.punctures;
  bool minimal = false;
  if (p == 0)
    minimal = coherence.coherent && st.faces == 1 &&
              st.crossings == 2 * st.genus - 1;
  else {
    minimal = coherence.coherent && st.faces == p &&
              st.crossings == 2 * st.genus + p - 2 &&
              static_cast<int>(pair.puncture_marks().size()) == st.faces;
    for (auto [face, count] : pair.puncture_marks())
      minimal = minimal && count == 1;
  }

  std::cout << "faces: " << st.faces << "\n"
            << "euler_characteristic: " << st.euler_characteristic << "\n"
            << "genus: " << st.genus << "\n"
            << "punctures: " << st.punctures << "\n"
            << "coherent: " << (coherence.coherent ? "yes" : "no") << "\n"
            << "geometric: " << coherence.geometric << "\n"
            << "algebraic: " << coherence.algebraic_abs << "\n"
            << "horizontal_cylinders: "
            << cylinders(origami, Direction::Horizontal).size() << "\n"
            << "vertical_cylinders: "
            << cylinders(origami, Direction::Vertical).size() << "\n"
            << "stratum: " << profile.stratum << "\n"
            << "marked_points: " << profile.marked_points << "\n"
            << "minimal: " << (minimal ? "yes" : "no") << "\n";

  if (!coherence.coherent)
    return 1;
  if (expect_minimal && !minimal)
    return 1;
  return 0;
}

int cmd_apply_scheme(const std::string &scheme_path, const std::string &out_path) {
  const SchemeDocument doc = read_scheme(slurp(scheme_path));
  const Scheme scheme = to_scheme(doc);
  validate_scheme_structure(scheme); // exit 1 with the violated condition
  const CurvePair pair = apply_scheme(scheme);

  const SurfaceStats st = stats(pair);
  if (st.crossings != scheme.seed_m + scheme.handle_count())
    throw error("apply-scheme: output failed verification");

  spew(out_path, write_pair(pair_document(pair, doc)));
  const bool minimal = st.faces == 1 && st.crossings == 2 * st.genus - 1;
  print_summary(summary_stream(out_path), pair, minimal);
  return 0;
}

int cmd_agraph(const std::string &scheme_path, const std::string &dot_path) {
  const SchemeDocument doc = read_scheme(slurp(scheme_path));
  const Scheme scheme = to_scheme(doc);
  validate_scheme_structure(scheme);
  const AGraph graph = a_graph(scheme);
  spew(dot_path, to_dot(graph));
  if (dot_path != "-") {
    const auto comps = components(graph);
    std::cout << "components: " << comps.size() << "\n"
              << "verdict: "
              << (is_tree(graph) ? "tree"
                                 : is_forest(graph) ? "forest" : "not-a-forest")
              << "\n";
  }
  return 0;
}

int cmd_enumerate(int genus, bool dedup, const std::string &out_dir,
                  long long budget, bool modulo_swap, bool modulo_reversal) {
  EnumerationOptions opts;
  opts.budget = budget;
  opts.dedup = dedup;
  opts.modulo_swap = modulo_swap;
  opts.modulo_reversal = modulo_reversal;
  const EnumerationResult result = enumerate_point_schemes(genus, opts);

  for (size_t k = 0; k < result.classes.size(); ++k) {
    const auto &cls = result.classes[k];
    std::string rep = "-";
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      rep = (std::filesystem::path(out_dir) /
             ("genus" + std::to_string(genus) + "_class" + std::to_string(k) +
              ".json"))
                .string();
      spew(rep, write_pair(pair_document(cls.representative,
                                         scheme_document(cls.scheme))));
    }
    std::cout << "class=" << k << " size=" << cls.size << " rep=" << rep << "\n";
  }
  std::cout << "classes=" << result.classes.size()
            << " survivors=" << result.survivors
            << " candidates=" << result.candidates
            << " partial=" << (result.partial ? "yes" : "no") << "\n";
  return 0;
}

int cmd_render(const std::string &path, const std::string &svg_path,
               const std::string &style) {
  const std::string text = slurp(path);
  const json raw = parse_json(text);
  if (raw.contains("n") && raw["n"].is_number_integer() &&
      raw["n"].get<int>() == 0) {
    std::cerr << "render: unrenderable document (n = 0)\n";
    return 1;
  }
  const PairDocument doc = read_pair(text);
  const CurvePair pair = to_curve_pair(doc);
  spew(svg_path, style == "tiling" ? render_tiling(pair) : render_strip(pair));
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Minimally intersecting coherent filling pairs and their "
               "origamis: construction, verification, surgery schemes, "
               "enumeration and rendering."};
  app.require_subcommand(1);

  int genus = 0;
  int punctures = 0;
  std::string out_path = "-";
  auto *construct = app.add_subcommand(
      "construct", "Build a minimal coherent filling pair for a genus");
  construct->add_option("--genus", genus, "target genus")->required();
  construct->add_option("--punctures", punctures, "puncture count (default 0)");
  construct->add_option("--out", out_path, "output file ('-' for stdout)");

  std::string verify_file;
  bool expect_minimal = false;
  auto *verify = app.add_subcommand("verify", "Check a curve-pair document");
  verify->add_option("file", verify_file, "pair document ('-' for stdin)")
      ->required();
  verify->add_flag("--expect-minimal", expect_minimal,
                   "fail unless the pair is minimal");

  std::string scheme_file;
  std::string apply_out = "-";
  auto *apply = app.add_subcommand("apply-scheme",
                                   "Apply a 1-handle attaching scheme");
  apply->add_option("scheme", scheme_file, "scheme document ('-' for stdin)")
      ->required();
  apply->add_option("--out", apply_out, "output file ('-' for stdout)");

  std::string agraph_file;
  std::string dot_path = "-";
  auto *agraph = app.add_subcommand("agraph", "Export a scheme's A-graph as DOT");
  agraph->add_option("scheme", agraph_file, "scheme document ('-' for stdin)")
      ->required();
  agraph->add_option("--dot", dot_path, "DOT output file ('-' for stdout)");

  int enum_genus = 0;
  bool dedup = false;
  std::string out_dir;
  long long budget = 1'000'000;
  bool modulo_swap = false;
  bool modulo_reversal = false;
  auto *enumerate = app.add_subcommand(
      "enumerate", "Exhaust point-local schemes for a genus");
  enumerate->add_option("--genus", enum_genus, "target genus")->required();
  enumerate->add_flag("--dedup", dedup,
                      "group results by simultaneous conjugacy");
  enumerate->add_option("--out-dir", out_dir,
                        "write one representative document per class");
  enumerate->add_option("--budget", budget, "candidate budget");
  enumerate->add_flag("--modulo-swap", modulo_swap,
                      "also identify a pair with its curve-swapped mirror");
  enumerate->add_flag("--modulo-reversal", modulo_reversal,
                      "also identify a pair with its orientation reversal");

  std::string render_file;
  std::string svg_path;
  std::string style = "strip";
  auto *render = app.add_subcommand("render", "Draw a pair as SVG");
  render->add_option("file", render_file, "pair document ('-' for stdin)")
      ->required();
  render->add_option("--svg", svg_path, "SVG output file ('-' for stdout)")
      ->required();
  render->add_option("--style", style, "strip or tiling")
      ->check(CLI::IsMember({"strip", "tiling"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*construct)
      return cmd_construct(genus, punctures, out_path);
    if (*verify)
      return cmd_verify(verify_file, expect_minimal);
    if (*apply)
      return cmd_apply_scheme(scheme_file, apply_out);
    if (*agraph)
      return cmd_agraph(agraph_file, dot_path);
    if (*enumerate)
      return cmd_enumerate(enum_genus, dedup, out_dir, budget, modulo_swap,
                           modulo_reversal);
    if (*render)
      return cmd_render(render_file, svg_path, style);
  } catch (const parse_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
