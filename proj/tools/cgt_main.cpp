// Command-line surface for the group presentation toolkit: generate the
// presentation families and witness words, decide word problems, run the
// area/filling oracles, build and validate van Kampen diagrams, replay
// Tietze sequences, and emit scaling reports.
//
// Exit codes: 0 success, 1 absent/undecided result, 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cgt/diagram_builders.hpp"
#include "cgt/json_io.hpp"
#include "cgt/oracles.hpp"
#include "cgt/wordproblem.hpp"

namespace {

using namespace cgt;

struct RunConfig {
  SearchCaps caps{20, 24, 2'000'000};
  std::int64_t bit_cap = kDefaultBitCap;
  std::int64_t cell_budget = kDefaultCellBudget;
  std::string format = "json";
  std::string out;
  bool serial = false;
};

void apply_env(RunConfig& cfg) {
  auto get = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (!v) return std::nullopt;
    return std::string(v);
  };
  if (auto v = get("CGT_CAPS_MAX_LEN")) cfg.caps.max_word_length = std::stoll(*v);
  if (auto v = get("CGT_CAPS_MAX_COST")) cfg.caps.max_cost = std::stoll(*v);
  if (auto v = get("CGT_CAPS_MAX_STATES")) cfg.caps.max_states = std::stoll(*v);
  if (auto v = get("CGT_BIT_CAP")) cfg.bit_cap = std::stoll(*v);
  if (auto v = get("CGT_CELL_BUDGET")) cfg.cell_budget = std::stoll(*v);
  if (auto v = get("CGT_FORMAT")) cfg.format = *v;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file " + path);
  json j = json::parse(in);
  if (j.contains("caps")) {
    const json& c = j["caps"];
    if (c.contains("max_word_length")) cfg.caps.max_word_length = c["max_word_length"].get<std::int64_t>();
    if (c.contains("max_cost")) cfg.caps.max_cost = c["max_cost"].get<std::int64_t>();
    if (c.contains("max_states")) cfg.caps.max_states = c["max_states"].get<std::int64_t>();
  }
  if (j.contains("bit_cap")) cfg.bit_cap = j["bit_cap"].get<std::int64_t>();
  if (j.contains("cell_budget")) cfg.cell_budget = j["cell_budget"].get<std::int64_t>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw FormatError("cannot open output file " + cfg.out);
    out << payload;
  }
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open output file " + path);
  out << payload;
}

Presentation family_presentation(const std::string& family, int n) {
  if (family == "G") return make_G(n);
  if (family == "P") return make_P(n);
  if (family == "Q") return make_Q(n);
  if (family == "T") return make_T(n);
  throw ParamError("unknown presentation family \"" + family + "\"");
}

// Inline words: a JSON array like [2,1,-2,-1], or the shorthands
// w<m>, v<n>, g:<n>:<k>.
Word parse_word(const std::string& text, const AlphabetRef& alphabet) {
  if (text.empty()) throw ParamError("missing --word / --word-file");
  if (text[0] == 'w' && text.find('[') == std::string::npos) {
    Word w = w_word(std::stoi(text.substr(1)));
    return Word::from_letters(alphabet, w.letters());
  }
  if (text[0] == 'v' && text.find('[') == std::string::npos) {
    Word w = v_word(std::stoi(text.substr(1)));
    return Word::from_letters(alphabet, w.letters());
  }
  if (text.rfind("g:", 0) == 0) {
    auto rest = text.substr(2);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw FormatError("g shorthand is g:<n>:<k>");
    Word w = g_word(std::stoi(rest.substr(0, colon)), std::stoi(rest.substr(colon + 1)));
    return Word::from_letters(alphabet, w.letters());
  }
  return word_from_json(alphabet, json::parse(text));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open input file " + path);
  return json::parse(in);
}

int run(int argc, char** argv) {
  CLI::App app{"computational toolkit for the G_n / P_n / Q_n presentation families"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow a subcommand

  RunConfig cfg;
  std::string config_path;
  // precedence: defaults < config file < environment < flags
  app.add_option("--config", config_path, "JSON config file");
  auto* f_len = app.add_option("--caps-max-len", cfg.caps.max_word_length, "search cap: max reduced word length");
  auto* f_cost = app.add_option("--caps-max-cost", cfg.caps.max_cost, "search cap: max relator insertions");
  auto* f_states = app.add_option("--caps-max-states", cfg.caps.max_states, "search cap: max stored states");
  auto* f_bits = app.add_option("--bit-cap", cfg.bit_cap, "exponent saturation cap in bits");
  auto* f_cells = app.add_option("--cell-budget", cfg.cell_budget, "diagram builder cell budget");
  auto* f_fmt = app.add_option("--format", cfg.format, "output format: json|csv|text")
                    ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "write the primary output to this file");
  app.add_flag("--serial", cfg.serial, "disable internal parallelism");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a presentation or witness word");
  std::string gen_what;
  int gen_a = 0, gen_b = 0;
  gen->add_option("family", gen_what, "G|P|Q|T|w|g|v")->required();
  gen->add_option("n", gen_a, "n (families, g, v) or m (w)")->required();
  gen->add_option("k", gen_b, "k (g only)");

  // wp
  auto* wp = app.add_subcommand("wp", "decide triviality of a word");
  std::string wp_family = "G", wp_word_text, wp_word_file, wp_cert_path;
  int wp_n = 2;
  wp->add_option("--family", wp_family, "G|P");
  wp->add_option("--n", wp_n, "family parameter");
  wp->add_option("--word", wp_word_text, "inline word (JSON array or w<m>/v<n>/g:<n>:<k>)");
  wp->add_option("--word-file", wp_word_file, "file holding a word JSON array");
  wp->add_option("--certificate", wp_cert_path, "also write the Z certificate (P family)");

  // area / fill
  auto* area_cmd = app.add_subcommand("area", "minimal relator insertions trivializing a word");
  auto* fill_cmd = app.add_subcommand("fill", "minimal peak length over null sequences");
  std::string or_family = "G", or_word_text, or_word_file, or_witness;
  int or_n = 2;
  for (CLI::App* c : {area_cmd, fill_cmd}) {
    c->add_option("--family", or_family, "G|P|Q|T");
    c->add_option("--n", or_n, "family parameter");
    c->add_option("--word", or_word_text, "inline word or shorthand");
    c->add_option("--word-file", or_word_file, "file holding a word JSON array");
    c->add_option("--witness", or_witness, "write the null-sequence witness here");
  }

  // diagram
  auto* diagram = app.add_subcommand("diagram", "build, validate or decompose diagrams");
  auto* dbuild = diagram->add_subcommand("build", "construct a named diagram");
  std::string db_kind;
  int db_param = 1;
  dbuild->add_option("kind", db_kind, "power|w|xn")->required();
  dbuild->add_option("param", db_param, "m (power, w) or n (xn)")->required();
  auto* dvalidate = diagram->add_subcommand("validate", "validate a diagram file");
  std::string dv_in;
  dvalidate->add_option("--in", dv_in, "diagram JSON file")->required();
  auto* dannuli = diagram->add_subcommand("annuli", "t-annulus decomposition of a diagram file");
  std::string da_in;
  dannuli->add_option("--in", da_in, "diagram JSON file")->required();
  diagram->require_subcommand(1);

  // tietze
  auto* tietze = app.add_subcommand("tietze", "elementary-operation sequences");
  auto* treplay = tietze->add_subcommand("replay", "apply an op sequence to a presentation");
  std::string tr_pres, tr_ops;
  treplay->add_option("--in", tr_pres, "presentation JSON file")->required();
  treplay->add_option("--ops", tr_ops, "elementary op JSON file")->required();
  auto* ttriv = tietze->add_subcommand("trivialize", "run the standard Q(n) -> T(n) sequence");
  int tt_n = 2;
  std::string tt_ops_out;
  ttriv->add_option("--n", tt_n, "family parameter")->required();
  ttriv->add_option("--ops-out", tt_ops_out, "write the op sequence here");
  tietze->require_subcommand(1);

  // report
  auto* report = app.add_subcommand("report", "scaling and Dehn-profile tables");
  auto* rscale = report->add_subcommand("scaling", "areas of the w_m fillings");
  int rs_from = 1, rs_to = 3;
  rscale->add_option("--m-from", rs_from, "first m");
  rscale->add_option("--m-to", rs_to, "last m");
  auto* rdehn = report->add_subcommand("dehn-profile", "max area per word length");
  int rd_n = 2;
  std::int64_t rd_len = 6;
  rdehn->add_option("--n", rd_n, "G-family parameter");
  rdehn->add_option("--max-length", rd_len, "table rows up to this word length");
  report->require_subcommand(1);

  for (CLI::App* s : {gen, wp, area_cmd, fill_cmd, diagram, dbuild, dvalidate, dannuli, tietze,
                      treplay, ttriv, report, rscale, rdehn}) {
    s->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  // resolve precedence now that we know which flags were set
  RunConfig flag_values = cfg;
  cfg = RunConfig{};
  if (!config_path.empty()) apply_config_file(cfg, config_path);
  apply_env(cfg);
  if (f_len->count()) cfg.caps.max_word_length = flag_values.caps.max_word_length;
  if (f_cost->count()) cfg.caps.max_cost = flag_values.caps.max_cost;
  if (f_states->count()) cfg.caps.max_states = flag_values.caps.max_states;
  if (f_bits->count()) cfg.bit_cap = flag_values.bit_cap;
  if (f_cells->count()) cfg.cell_budget = flag_values.cell_budget;
  if (f_fmt->count()) cfg.format = flag_values.format;
  cfg.out = flag_values.out;
  cfg.serial = flag_values.serial;

  OracleOptions oracle_opts;
  if (cfg.serial) oracle_opts.parallel = ParallelMode::Serial;
  WpCaps wp_caps;
  wp_caps.bit_cap = cfg.bit_cap;

  if (gen->parsed()) {
    if (gen_what == "w") {
      emit(cfg, word_to_json(w_word(gen_a)).dump());
    } else if (gen_what == "v") {
      emit(cfg, word_to_json(v_word(gen_a)).dump());
    } else if (gen_what == "g") {
      if (gen->count("k") == 0) throw ParamError("gen g needs n and k");
      emit(cfg, word_to_json(g_word(gen_a, gen_b)).dump());
    } else {
      emit(cfg, presentation_to_json(family_presentation(gen_what, gen_a)).dump(2));
    }
    return 0;
  }

  if (wp->parsed()) {
    if (wp_family != "G" && wp_family != "P") {
      throw ParamError("wp supports the families G and P");
    }
    Presentation p = family_presentation(wp_family, wp_n);
    Word w = wp_word_file.empty() ? parse_word(wp_word_text, p.alphabet())
                                  : word_from_json(p.alphabet(), load_json_file(wp_word_file));
    if (wp_family == "G") {
      WpVerdict v = is_trivial_G(wp_n, w, wp_caps);
      emit(cfg, v.str());
      return v.is_undecided() ? 1 : 0;
    }
    try {
      bool triv = is_trivial_P(wp_n, w, wp_caps);
      if (!wp_cert_path.empty()) {
        write_file(wp_cert_path, certificate_to_json(z_certificate(wp_n, wp_caps)).dump(2));
      }
      emit(cfg, triv ? "trivial" : "nontrivial");
      return 0;
    } catch (const CapError& e) {
      emit(cfg, std::string("undecided(") + e.what() + ")");
      return 1;
    }
  }

  if (area_cmd->parsed() || fill_cmd->parsed()) {
    Presentation p = family_presentation(or_family, or_n);
    Word w = or_word_file.empty() ? parse_word(or_word_text, p.alphabet())
                                  : word_from_json(p.alphabet(), load_json_file(or_word_file));
    std::optional<std::int64_t> value;
    NullSequence witness;
    if (area_cmd->parsed()) {
      if (auto r = min_area(p, w, cfg.caps, oracle_opts)) {
        value = r->cost;
        witness = std::move(r->witness);
      }
    } else {
      if (auto r = fill_length(p, w, cfg.caps, oracle_opts)) {
        value = r->peak;
        witness = std::move(r->witness);
      }
    }
    if (!value) {
      emit(cfg, "absent");
      return 1;
    }
    emit(cfg, std::to_string(*value));
    if (!or_witness.empty()) write_file(or_witness, null_sequence_to_json(witness).dump(2));
    return 0;
  }

  if (dbuild->parsed()) {
    VanKampenDiagram d;
    if (db_kind == "power") {
      d = build_power_diagram(db_param, cfg.cell_budget);
    } else if (db_kind == "w") {
      d = build_w_diagram(db_param, cfg.cell_budget);
    } else if (db_kind == "xn") {
      d = build_xn_diagram(db_param);
    } else {
      throw ParamError("diagram build kind must be power|w|xn");
    }
    emit(cfg, diagram_to_json(d).dump(2));
    return 0;
  }
  if (dvalidate->parsed()) {
    VanKampenDiagram d = diagram_from_json(load_json_file(dv_in));
    ValidationReport rep = validate(d);
    emit(cfg, validation_report_to_json(rep).dump(2));
    return rep.ok() ? 0 : 1;
  }
  if (dannuli->parsed()) {
    VanKampenDiagram d = diagram_from_json(load_json_file(da_in));
    json arr = json::array();
    for (const auto& ann : t_annuli(d)) {
      arr.push_back(json{{"cells", ann.cells},
                         {"inner_boundary", word_to_json(ann.inner_boundary)},
                         {"outer_boundary", word_to_json(ann.outer_boundary)}});
    }
    emit(cfg, arr.dump(2));
    return 0;
  }

  if (treplay->parsed()) {
    Presentation p = presentation_from_json(load_json_file(tr_pres));
    auto ops = ops_from_json(load_json_file(tr_ops));
    emit(cfg, presentation_to_json(apply_sequence(p, ops)).dump(2));
    return 0;
  }
  if (ttriv->parsed()) {
    auto ops = standard_trivialization_sequence(tt_n);
    Presentation result = apply_sequence(make_Q(tt_n), ops);
    bool matches = presentations_equal(result, make_T(tt_n));
    if (!tt_ops_out.empty()) write_file(tt_ops_out, ops_to_json(ops).dump());
    emit(cfg, "ops: " + std::to_string(ops.size()) +
                  "\nmatches T(" + std::to_string(tt_n) + "): " + (matches ? "true" : "false"));
    return matches ? 0 : 1;
  }

  if (rscale->parsed()) {
    auto rows = scaling_report(rs_from, rs_to, cfg.caps, cfg.cell_budget, oracle_opts);
    emit(cfg, cfg.format == "json" ? scaling_report_to_json(rows).dump(2)
                                   : scaling_report_to_csv(rows));
    return 0;
  }
  if (rdehn->parsed()) {
    auto rows = dehn_profile(make_G(rd_n), rd_len, cfg.caps, oracle_opts);
    emit(cfg, cfg.format == "json" ? dehn_profile_to_json(rows).dump(2)
                                   : dehn_profile_to_csv(rows));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapError& e) {
    std::cout << "undecided(" << e.what() << ")\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
