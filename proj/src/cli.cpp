#include "hopspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopspec/csvio.hpp"
#include "hopspec/dyson.hpp"
#include "hopspec/eig.hpp"
#include "hopspec/hamiltonian.hpp"
#include "hopspec/rootfind.hpp"
#include "hopspec/spectrum.hpp"
#include "hopspec/svg.hpp"
#include "hopspec/transfer.hpp"

namespace hopspec {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "hopspec 0.1.0";

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json points_json(const std::vector<Complex>& pts) {
  json arr = json::array();
  for (const Complex& z : pts) arr.push_back(complex_json(z));
  return arr;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  os << content;
  os.flush();
  if (!os) throw std::ios_base::failure("write to '" + path + "' failed");
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-") {
    std::cout << content;
    return;
  }
  write_file(out, content);
}

bool wants(const std::vector<std::string>& formats, const char* f) {
  for (const std::string& s : formats)
    if (s == f) return true;
  return false;
}

// Commas in free-text CSV fields would need quoting; swap them out instead.
std::string csv_safe(std::string s) {
  for (char& c : s)
    if (c == ',') c = ';';
  return s;
}

// ---------------------------------------------------------------------------
// words enumerate

struct WordsArgs {
  std::size_t length = 1;
  bool canonical = false, primitive = false, invariants = false;
  std::string format = "text", out;
};

std::string invariants_text(const CyclicInvariants& inv) {
  std::string s = "s=" + format_complex(inv.s) + " p=" + format_complex(inv.p);
  if (inv.d) s += " d=" + format_complex(*inv.d);
  if (inv.kappa) s += " kappa=" + format_complex(*inv.kappa);
  if (inv.rho) s += " rho=" + format_complex(*inv.rho);
  if (inv.omega) s += " omega=" + format_complex(*inv.omega);
  if (inv.delta) s += " delta=" + format_complex(*inv.delta);
  return s;
}

int cmd_words_enumerate(const WordsArgs& a) {
  std::ostringstream os;
  json rows = json::array();
  std::size_t count = 0;

  if (a.format == "csv") {
    os << "word,length,primitive,canonical";
    if (a.invariants) os << ",s,p,d,kappa,rho,omega,delta";
    os << '\n';
  }

  for_each_binary_word(a.length, [&](const Word& w) {
    const bool prim = is_primitive(w);
    const bool canon = canonical_rotation_index(w) == 0;
    if (a.canonical && !canon) return;
    if (a.primitive && !prim) return;
    ++count;

    if (a.format == "text") {
      os << w.text();
      if (a.invariants) os << "  " << invariants_text(cyclic_invariants(w));
      os << '\n';
    } else if (a.format == "csv") {
      os << w.text() << ',' << w.length() << ',' << (prim ? 1 : 0) << ',' << (canon ? 1 : 0);
      if (a.invariants) {
        const CyclicInvariants inv = cyclic_invariants(w);
        auto field = [&](const std::optional<Complex>& v) {
          os << ',';
          if (v) os << csv_safe(format_complex(*v));
        };
        os << ',' << csv_safe(format_complex(inv.s)) << ',' << csv_safe(format_complex(inv.p));
        field(inv.d);
        field(inv.kappa);
        field(inv.rho);
        field(inv.omega);
        field(inv.delta);
      }
      os << '\n';
    } else {  // json
      json row{{"word", w.text()}, {"length", w.length()}, {"primitive", prim},
               {"canonical", canon}};
      if (a.invariants) {
        const CyclicInvariants inv = cyclic_invariants(w);
        row["s"] = complex_json(inv.s);
        row["p"] = complex_json(inv.p);
        if (inv.d) row["d"] = complex_json(*inv.d);
        if (inv.kappa) row["kappa"] = complex_json(*inv.kappa);
        if (inv.rho) row["rho"] = complex_json(*inv.rho);
        if (inv.omega) row["omega"] = complex_json(*inv.omega);
        if (inv.delta) row["delta"] = complex_json(*inv.delta);
      }
      rows.push_back(std::move(row));
    }
  });

  if (a.format == "json") {
    json doc{{"length", a.length}, {"count", count}, {"words", std::move(rows)}};
    emit(a.out, doc.dump(2) + "\n");
  } else {
    emit(a.out, os.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// qpoly

struct QpolyArgs {
  std::string word, format = "text", out;
};

int cmd_qpoly(const QpolyArgs& a) {
  const Word w = Word::parse(a.word);
  const TransferWord tw = transfer_polynomials(w);
  const PQR parts = pqr(tw);
  const CPoly trace = tw.trace();

  bool has_closed = false, closed_matches = false;
  CPoly closed;
  try {
    closed = q_closed_form(cyclic_invariants(w));
    has_closed = true;
    closed_matches = (closed == parts.Q);
  } catch (const UnsupportedLength&) {
  }

  if (a.format == "text") {
    std::ostringstream os;
    os << "word " << w.text() << '\n';
    os << "length " << w.length() << '\n';
    os << "det " << format_complex(tw.det) << '\n';
    os << "trace " << trace.text() << '\n';
    os << "P " << parts.P.text() << '\n';
    os << "Q " << parts.Q.text() << '\n';
    os << "R " << parts.R.text() << '\n';
    if (has_closed) {
      os << "Q_closed " << closed.text() << '\n';
      os << "closed_matches " << (closed_matches ? "yes" : "no") << '\n';
    }
    emit(a.out, os.str());
  } else {
    json doc{{"word", w.text()},
             {"length", w.length()},
             {"det", complex_json(tw.det)},
             {"trace", trace.text()},
             {"P", parts.P.text()},
             {"Q", parts.Q.text()},
             {"R", parts.R.text()}};
    if (has_closed) {
      doc["Q_closed"] = closed.text();
      doc["closed_matches"] = closed_matches;
    }
    emit(a.out, doc.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum word / sentence / random

struct SpectrumWordArgs {
  std::string word;
  std::size_t theta_steps = 2048;
  std::string out = "word_spectrum";
  std::vector<std::string> formats{"csv", "json"};
};

json word_spectrum_json(const WordSpectrum& ws, std::size_t theta_steps) {
  json branches = json::array();
  for (const BlochBranch& br : ws.branches) branches.push_back(br.points.size());
  return json{{"word", ws.word.text()},
              {"length", ws.word.length()},
              {"det", complex_json(ws.det)},
              {"theta_steps", theta_steps},
              {"trace", ws.trace.text()},
              {"Q", ws.Q.text()},
              {"R", ws.R.text()},
              {"branch_point_counts", std::move(branches)},
              {"endpoints", points_json(ws.endpoints)},
              {"poles", points_json(ws.isolated.poles)},
              {"isolated_points", points_json(ws.isolated.points)},
              {"gap_thetas", ws.gap_thetas}};
}

std::vector<svg::Layer> spectrum_layers(const std::vector<WordSpectrum>& spectra) {
  std::vector<svg::Layer> layers;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    svg::Layer curves{"curves " + spectra[i].word.text(),
                      kPalette[i % std::size(kPalette)], 1.2, support_points(spectra[i])};
    layers.push_back(std::move(curves));
  }
  return layers;
}

int cmd_spectrum_word(const SpectrumWordArgs& a) {
  const Word w = Word::parse(a.word);
  const WordSpectrum ws = bloch_curve(w, a.theta_steps);

  if (wants(a.formats, "csv")) {
    std::ostringstream os;
    csvio::write_word_spectrum(os, ws);
    write_file(a.out + ".csv", os.str());
  }
  if (wants(a.formats, "json")) {
    json doc{{"generator", kVersion}, {"kind", "word_spectrum"},
             {"spectrum", word_spectrum_json(ws, a.theta_steps)}};
    write_file(a.out + ".json", doc.dump(2) + "\n");
  }
  if (wants(a.formats, "svg")) {
    svg::Options opt;
    write_file(a.out + ".svg", svg::render_scatter(spectrum_layers({ws}), opt));
  }
  return 0;
}

struct SpectrumSentenceArgs {
  std::string paragraph;
  std::size_t theta_steps = 2048;
  std::size_t n = 0;  // 0: no finite-chain eigensolve
  std::string out = "sentence_spectrum";
  std::vector<std::string> formats{"csv", "json"};
};

int cmd_spectrum_sentence(const SpectrumSentenceArgs& a) {
  const Paragraph par = parse_paragraph(a.paragraph);

  // distinct words, in order of first appearance
  std::vector<Word> words;
  for (const Paragraph::Segment& seg : par.segments) {
    bool seen = false;
    for (const Word& w : words) seen = seen || w == seg.word;
    if (!seen) words.push_back(seg.word);
  }

  std::vector<WordSpectrum> spectra;
  spectra.reserve(words.size());
  for (const Word& w : words) spectra.push_back(bloch_curve(w, a.theta_steps));

  EigenResult eigs;
  const bool with_eigs = a.n > 0;
  if (with_eigs) eigs = eigenvalues_qr({a.n, ParagraphSource{par}});

  if (wants(a.formats, "csv")) {
    std::ostringstream os;
    bool first = true;
    for (const WordSpectrum& ws : spectra) {
      if (first) {
        csvio::write_word_spectrum(os, ws);
        first = false;
      } else {
        std::ostringstream tmp;
        csvio::write_word_spectrum(tmp, ws);
        const std::string block = tmp.str();
        os << block.substr(block.find('\n') + 1);  // drop the repeated header
      }
    }
    write_file(a.out + ".csv", os.str());
    if (with_eigs) {
      std::ostringstream es;
      csvio::write_eigenvalues(es, eigs.eigenvalues, std::nullopt, a.n,
                               "paragraph:" + csv_safe(par.text()));
      write_file(a.out + "_eigs.csv", es.str());
    }
  }
  if (wants(a.formats, "json")) {
    json blocks = json::array();
    for (const WordSpectrum& ws : spectra) blocks.push_back(word_spectrum_json(ws, a.theta_steps));
    json doc{{"generator", kVersion},
             {"kind", "sentence_spectrum"},
             {"paragraph", par.text()},
             {"letters_per_period", par.letter_count()},
             {"spectra", std::move(blocks)}};
    if (with_eigs) {
      doc["n"] = a.n;
      doc["eigenvalue_count"] = eigs.eigenvalues.size();
      doc["qr_sweeps"] = eigs.stats.sweeps;
      doc["real_path"] = eigs.real_path;
    }
    write_file(a.out + ".json", doc.dump(2) + "\n");
  }
  if (wants(a.formats, "svg")) {
    std::vector<svg::Layer> layers = spectrum_layers(spectra);
    if (with_eigs)
      layers.push_back({"eigenvalues", "#333333", 1.8, eigs.eigenvalues});
    svg::Options opt;
    write_file(a.out + ".svg", svg::render_scatter(layers, opt));
  }
  return 0;
}

struct SpectrumRandomArgs {
  std::string model = "A";
  std::size_t n = 100;
  std::uint64_t seed = 1;
  std::size_t realizations = 1;
  std::string out = "random_spectrum";
  std::vector<std::string> formats{"csv", "json"};
};

int cmd_spectrum_random(const SpectrumRandomArgs& a) {
  std::ostringstream os;
  os << "re,im,seed,n,source\n";
  const std::string source = a.model == "A" ? "random-sign" : "random-phase";

  json meta_runs = json::array();
  std::vector<Complex> all;
  for (std::size_t r = 0; r < a.realizations; ++r) {
    const std::uint64_t seed = a.seed + r;
    HamiltonianSpec spec{a.n, RandomSignSource{seed}};
    if (a.model == "B") spec.source = RandomPhaseSource{seed};
    const EigenResult res = eigenvalues_qr(spec);
    for (const Complex& z : res.eigenvalues)
      os << format_double(z.real()) << ',' << format_double(z.imag()) << ',' << seed << ',' << a.n
         << ',' << source << '\n';
    all.insert(all.end(), res.eigenvalues.begin(), res.eigenvalues.end());
    meta_runs.push_back(json{{"seed", seed},
                             {"eigenvalues", res.eigenvalues.size()},
                             {"qr_sweeps", res.stats.sweeps},
                             {"real_path", res.real_path}});
  }

  if (wants(a.formats, "csv")) write_file(a.out + ".csv", os.str());
  if (wants(a.formats, "json")) {
    json doc{{"generator", kVersion}, {"kind", "random_spectrum"}, {"model", a.model},
             {"n", a.n},           {"base_seed", a.seed},          {"realizations", a.realizations},
             {"runs", std::move(meta_runs)}};
    write_file(a.out + ".json", doc.dump(2) + "\n");
  }
  if (wants(a.formats, "svg")) {
    svg::Options opt;
    write_file(a.out + ".svg",
               svg::render_scatter({{"eigenvalues", kPalette[0], 1.4, all}}, opt));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// escape-map

struct EscapeMapArgs {
  std::string model = "A", word;
  GridSpec grid;
  std::uint64_t seed = 1;
  std::size_t burn_in = 1000, samples = 10000, trajectories = 4;
  double ymax = 1e8;
  unsigned threads = 0;
  std::string out = "escape_map";
  std::vector<std::string> formats{"csv", "json"};
};

int cmd_escape_map(const EscapeMapArgs& a) {
  DSConfig proto;
  proto.burn_in = a.burn_in;
  proto.samples = a.samples;
  proto.y_max = a.ymax;
  if (!a.word.empty()) proto.stream = WordStream{Word::parse(a.word)};
  else proto.stream = SignStream{a.seed};

  const EscapeMap map = escape_map(a.grid, proto, a.trajectories, a.threads);

  if (wants(a.formats, "csv")) {
    std::ostringstream os;
    csvio::write_escape_map(os, map);
    write_file(a.out + ".csv", os.str());
  }
  if (wants(a.formats, "json")) {
    json doc{{"generator", kVersion},
             {"kind", "escape_map"},
             {"stream", a.word.empty() ? "random-sign" : "word:" + a.word},
             {"seed", a.seed},
             {"grid", json{{"x0", map.grid.x0}, {"x1", map.grid.x1}, {"y0", map.grid.y0},
                           {"y1", map.grid.y1}, {"nx", map.grid.nx}, {"ny", map.grid.ny}}},
             {"burn_in", a.burn_in},
             {"samples", a.samples},
             {"y_max", a.ymax},
             {"trajectories", a.trajectories}};
    write_file(a.out + ".json", doc.dump(2) + "\n");
  }
  if (wants(a.formats, "svg")) write_file(a.out + ".svg", svg::render_heatmap(map));
  return 0;
}

// ---------------------------------------------------------------------------
// overlay

struct OverlayArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> labels;
  std::string out = "overlay.svg";
  std::vector<double> viewport;  // x0 x1 y0 y1
  int width = 800, height = 800;
};

int cmd_overlay(const OverlayArgs& a) {
  std::vector<svg::Layer> layers;
  for (std::size_t i = 0; i < a.inputs.size(); ++i) {
    std::ifstream is(a.inputs[i]);
    if (!is) throw std::ios_base::failure("cannot open '" + a.inputs[i] + "'");
    svg::Layer layer;
    layer.points = csvio::read_points(is);
    layer.label = i < a.labels.size() ? a.labels[i] : a.inputs[i];
    layer.color = kPalette[i % std::size(kPalette)];
    layer.radius = 1.4;
    layers.push_back(std::move(layer));
  }
  svg::Options opt;
  if (a.viewport.size() == 4) {
    opt.x0 = a.viewport[0];
    opt.x1 = a.viewport[1];
    opt.y0 = a.viewport[2];
    opt.y1 = a.viewport[3];
  }
  opt.width = a.width;
  opt.height = a.height;
  write_file(a.out, svg::render_scatter(layers, opt));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Spectra of non-Hermitian random hopping chains", "hopspec"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Config file (key=value; flags override)");
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware)");
  app.require_subcommand(1);

  WordsArgs wa;
  auto* words = app.add_subcommand("words", "Word enumeration utilities");
  words->require_subcommand(1);
  auto* wenum = words->add_subcommand("enumerate", "List binary words of a given length");
  wenum->add_option("--length", wa.length, "Word length L")->required()->check(CLI::Range(1, 24));
  wenum->add_flag("--canonical", wa.canonical, "Only lexicographically-least rotations");
  wenum->add_flag("--primitive", wa.primitive, "Only primitive words");
  wenum->add_flag("--invariants", wa.invariants, "Include cyclic invariants");
  wenum->add_option("--format", wa.format)->check(CLI::IsMember({"text", "csv", "json"}));
  wenum->add_option("--out", wa.out, "Output path (default stdout)");

  QpolyArgs qa;
  auto* qpoly = app.add_subcommand("qpoly", "Transfer polynomials P, Q, R for a word");
  qpoly->add_option("--word", qa.word, "Word over +/- (e.g. ++-)")->required();
  qpoly->add_option("--format", qa.format)->check(CLI::IsMember({"text", "json"}));
  qpoly->add_option("--out", qa.out, "Output path (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "Spectra from words, sentences, or realizations");
  spectrum->require_subcommand(1);

  SpectrumWordArgs swa;
  auto* sword = spectrum->add_subcommand("word", "Bloch curves and isolated points of one word");
  sword->add_option("--word", swa.word)->required();
  sword->add_option("--theta-steps", swa.theta_steps)->check(CLI::Range(2, 1 << 20));
  sword->add_option("--out", swa.out, "Output prefix");
  sword->add_option("--format", swa.formats, "Any of csv,json,svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  SpectrumSentenceArgs ssa;
  auto* ssent = spectrum->add_subcommand("sentence", "Per-word curves of a paragraph, optional finite chain");
  ssent->add_option("--paragraph", ssa.paragraph, "e.g. ++-:16,+++:1,++-:16")->required();
  ssent->add_option("--theta-steps", ssa.theta_steps)->check(CLI::Range(2, 1 << 20));
  ssent->add_option("--n", ssa.n, "Chain letters for a finite eigensolve (0 = skip)");
  ssent->add_option("--out", ssa.out, "Output prefix");
  ssent->add_option("--format", ssa.formats, "Any of csv,json,svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  SpectrumRandomArgs sra;
  auto* srand_ = spectrum->add_subcommand("random", "Eigenvalues of random realizations");
  srand_->add_option("--model", sra.model)->check(CLI::IsMember({"A", "B"}))->required();
  srand_->add_option("--n", sra.n, "Subdiagonal letters (matrix dim n+1)")
      ->required()
      ->check(CLI::Range(std::size_t(1), std::size_t(5000)));
  srand_->add_option("--seed", sra.seed);
  srand_->add_option("--realizations", sra.realizations)->check(CLI::Range(1, 4096));
  srand_->add_option("--out", sra.out, "Output prefix");
  srand_->add_option("--format", sra.formats, "Any of csv,json,svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  EscapeMapArgs ea;
  auto* emap = app.add_subcommand("escape-map", "Ratio-escape raster over a z grid");
  auto* eword = emap->add_option("--word", ea.word, "Periodic word stream instead of model A");
  emap->add_option("--model", ea.model, "Random model (A)")->check(CLI::IsMember({"A"}))
      ->excludes(eword);
  emap->add_option("--nx", ea.grid.nx)->check(CLI::Range(1, 1024));
  emap->add_option("--ny", ea.grid.ny)->check(CLI::Range(1, 1024));
  std::vector<double> bounds;
  emap->add_option("--bounds", bounds, "x0 x1 y0 y1")->expected(4);
  emap->add_option("--seed", ea.seed);
  emap->add_option("--burn-in", ea.burn_in);
  emap->add_option("--samples", ea.samples)->check(CLI::Range(std::size_t(1), std::size_t(1) << 24));
  emap->add_option("--ymax", ea.ymax)->check(CLI::PositiveNumber);
  emap->add_option("--trajectories", ea.trajectories)->check(CLI::Range(1, 1024));
  emap->add_option("--out", ea.out, "Output prefix");
  emap->add_option("--format", ea.formats, "Any of csv,json,svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  OverlayArgs oa;
  auto* overlay = app.add_subcommand("overlay", "Scatter several point CSVs into one SVG");
  overlay->add_option("--in", oa.inputs, "Input CSV files")->required()->expected(-1);
  overlay->add_option("--labels", oa.labels, "Layer labels (parallel to --in)");
  overlay->add_option("--out", oa.out, "Output SVG path");
  overlay->add_option("--viewport", oa.viewport, "x0 x1 y0 y1")->expected(4);
  overlay->add_option("--width", oa.width)->check(CLI::Range(64, 8192));
  overlay->add_option("--height", oa.height)->check(CLI::Range(64, 8192));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the offending option/value
    return 2;
  }

  try {
    if (*wenum) return cmd_words_enumerate(wa);
    if (*qpoly) return cmd_qpoly(qa);
    if (*sword) return cmd_spectrum_word(swa);
    if (*ssent) return cmd_spectrum_sentence(ssa);
    if (*srand_) return cmd_spectrum_random(sra);
    if (*emap) {
      if (bounds.size() == 4) {
        ea.grid.x0 = bounds[0];
        ea.grid.x1 = bounds[1];
        ea.grid.y0 = bounds[2];
        ea.grid.y1 = bounds[3];
      }
      ea.threads = threads;
      return cmd_escape_map(ea);
    }
    if (*overlay) return cmd_overlay(oa);
    std::cerr << "hopspec: no command\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // includes UnsupportedLength
    std::cerr << "hopspec: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "hopspec: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {  // convergence and other numeric failures
    std::cerr << "hopspec: " << e.what() << '\n';
    return 3;
  }
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("hopspec");
  for (const std::string& s : args) argv.push_back(s.c_str());
  return run_cli(int(argv.size()), argv.data());
}

}  // namespace hopspec
