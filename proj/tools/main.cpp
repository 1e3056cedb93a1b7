#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "peano/counting.hpp"
#include "peano/formulas.hpp"
#include "peano/letter.hpp"
#include "peano/pattern.hpp"
#include "peano/render.hpp"
#include "peano/verify.hpp"
#include "peano/word.hpp"
#include "peano/word_io.hpp"

namespace {

constexpr int kUsageError = 2;

std::ofstream open_out(const std::string& path, bool binary) {
  std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

int cmd_generate(int n, const std::string& format, const std::string& out) {
  peano::LetterStream s(n);
  const bool packed = format == "packed";
  if (out.empty()) {
    if (packed) {
      peano::write_packed_stream(std::cout, s, n);
    } else {
      peano::write_text_stream(std::cout, s);
    }
  } else {
    std::ofstream f = open_out(out, packed);
    if (packed) {
      peano::write_packed_stream(f, s, n);
    } else {
      peano::write_text_stream(f, s);
    }
  }
  return 0;
}

// Closed-form rise/descent/equal counts for X_n; equals comes from the pair
// total 4^n - 2.
peano::BigCount formula_adjacent_count(int n, int lo, int hi) {
  const peano::RiseDescentPair rd = peano::rises_descents_formula(n);
  if (lo < hi) return rd.rises;
  if (lo > hi) return rd.descents;
  const peano::BigCount pairs = peano::BigCount(peano::word_length(n)) - 1;
  return pairs - rd.rises - rd.descents;
}

// Fast-path count for X_n known only through closed-form frequencies and
// its first/last letters. Returns nullopt if the pattern has no fast shape.
std::optional<peano::BigCount> fast_count_formula(int n, const peano::Pattern& p) {
  using namespace peano;
  if (!p.left_anchor && !p.right_anchor) {
    if (p.blocks.size() == 1 && p.blocks[0].letters.size() == 2) {
      const int lo = p.blocks[0].letters[0].value();
      const int hi = p.blocks[0].letters[1].value();
      return formula_adjacent_count(n, lo, hi);
    }
    bool uniform_singletons = true;
    for (const Block& b : p.blocks) {
      uniform_singletons = uniform_singletons && b.letters.size() == 1 &&
                           b.letters[0] == p.blocks[0].letters[0];
    }
    if (uniform_singletons) {
      const FrequencyVector f = frequency_formula(n);
      const unsigned ell = static_cast<unsigned>(p.blocks.size());
      BigCount sum = 0;
      for (int v = 1; v <= 4; ++v) sum += binomial(f.of(v), ell);
      return sum;
    }
    return std::nullopt;
  }
  if (const auto shape = classify_tau(p)) {
    const Letter first = letter_at(n, 0);
    const Letter last = letter_at(n, word_length(n) - 1);
    return count_anchored_run(frequency_formula(n), first, last, shape->kind,
                              shape->x, shape->y, shape->z == 0 ? 1 : shape->z,
                              shape->ell);
  }
  return std::nullopt;
}

std::optional<peano::BigCount> fast_count_word(const peano::Word& w,
                                               const peano::Pattern& p) {
  using namespace peano;
  if (!p.left_anchor && !p.right_anchor) {
    if (p.blocks.size() == 1 && p.blocks[0].letters.size() == 2) {
      const AdjacencyStats s = adjacency_stats(w);
      const int lo = p.blocks[0].letters[0].value();
      const int hi = p.blocks[0].letters[1].value();
      if (lo < hi) return s.rises;
      if (lo > hi) return s.descents;
      return s.equals;
    }
    bool uniform_singletons = true;
    for (const Block& b : p.blocks) {
      uniform_singletons = uniform_singletons && b.letters.size() == 1 &&
                           b.letters[0] == p.blocks[0].letters[0];
    }
    if (uniform_singletons) {
      const FrequencyVector f = letter_frequencies(w);
      const unsigned ell = static_cast<unsigned>(p.blocks.size());
      BigCount sum = 0;
      for (int v = 1; v <= 4; ++v) sum += binomial(f.of(v), ell);
      return sum;
    }
    return std::nullopt;
  }
  if (const auto shape = classify_tau(p)) {
    if (w.empty()) return BigCount(0);
    return count_anchored_run(letter_frequencies(w), w.front(), w.back(),
                              shape->kind, shape->x, shape->y,
                              shape->z == 0 ? 1 : shape->z, shape->ell);
  }
  return std::nullopt;
}

int cmd_count(std::optional<int> n, const std::string& word_file,
              const std::string& pattern_text, const std::string& method) {
  using namespace peano;
  const Pattern p = parse_pattern(pattern_text);

  std::optional<Word> word;
  if (!word_file.empty()) {
    word = read_word_file(word_file);
  }

  BigCount result;
  if (method == "naive") {
    if (!word) word = build_word(*n);
    result = count_occurrences_naive(*word, p);
  } else if (method == "dp") {
    if (!word) word = build_word(*n);
    result = count_occurrences(*word, p);
  } else if (method == "fast") {
    const auto fast = word ? fast_count_word(*word, p) : fast_count_formula(*n, p);
    if (!fast) {
      std::cerr << "no fast path for pattern '" << pattern_text
                << "'; supported shapes: y^l runs, a single adjacent pair, "
                   "[x-y^l), (x^l-y], [x-y^l-z]. Use --method dp.\n";
      return kUsageError;
    }
    result = *fast;
  } else {  // auto
    if (word) {
      result = count_occurrences(*word, p);
    } else if (*n <= kDefaultBuildCap) {
      result = count_occurrences(build_word(*n), p);
    } else {
      const auto fast = fast_count_formula(*n, p);
      if (!fast) {
        std::cerr << "X_" << *n << " exceeds the build cap of "
                  << kDefaultBuildCap
                  << " and the pattern has no fast shape; choose n <= "
                  << kDefaultBuildCap << " or a fast-shape pattern\n";
        return kUsageError;
      }
      result = *fast;
    }
  }
  std::cout << result.str() << '\n';
  return 0;
}

int cmd_frequencies(int n, const std::string& method) {
  peano::FrequencyVector f{};
  if (method == "formula") {
    f = peano::frequency_formula(n);
  } else if (method == "recurrence") {
    f = peano::frequency_recurrence(n);
  } else {
    peano::LetterStream s(n);
    f = peano::letter_frequencies(s);
  }
  for (int v = 1; v <= 4; ++v) {
    std::cout << v << ' ' << f.of(v).str() << '\n';
  }
  return 0;
}

int cmd_stats(int n) {
  peano::LetterStream s(n);
  const peano::AdjacencyStats a = peano::adjacency_stats(s);
  std::cout << "rises " << a.rises.str() << '\n'
            << "descents " << a.descents.str() << '\n'
            << "equals " << a.equals.str() << '\n';
  return 0;
}

int cmd_formula(const std::string& name, int n, unsigned ell,
                const std::string& kind_name, std::optional<int> x,
                std::optional<int> y, std::optional<int> z) {
  using namespace peano;
  if (name == "lemma1") {
    const FrequencyVector f = frequency_formula(n);
    for (int v = 1; v <= 4; ++v) std::cout << v << ' ' << f.of(v).str() << '\n';
    return 0;
  }
  if (name == "corollary2") {
    std::cout << power_pattern_formula(n, ell).str() << '\n';
    return 0;
  }
  if (name == "theorem4") {
    const RiseDescentPair rd = rises_descents_formula(n);
    std::cout << "rises " << rd.rises.str() << '\n'
              << "descents " << rd.descents.str() << '\n';
    return 0;
  }
  // table
  if (kind_name.empty() || !x || !y) {
    std::cerr << "formula --name table requires --kind, --x and --y\n";
    return kUsageError;
  }
  TauKind kind = TauKind::tau1;
  if (kind_name == "tau2") kind = TauKind::tau2;
  if (kind_name == "tau3") kind = TauKind::tau3;
  if (kind == TauKind::tau3 && !z) {
    std::cerr << "formula --kind tau3 requires --z\n";
    return kUsageError;
  }
  std::cout << tau_table_value(kind, *x, *y, z, n, ell).str() << '\n';
  return 0;
}

int cmd_verify(const std::string& suites_csv, int max_n, unsigned max_l,
               int workers, const std::string& report) {
  peano::SuiteConfig cfg;
  cfg.suites.clear();
  std::stringstream ss(suites_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) cfg.suites.push_back(item);
  }
  if (cfg.suites.empty()) cfg.suites.push_back("all");
  cfg.max_n = max_n;
  cfg.max_ell = max_l;
  cfg.workers = workers;
  cfg.report_path = report;

  const peano::VerifyOutcome outcome = peano::run_suites(cfg);
  if (report.empty()) {
    peano::write_report(std::cout, outcome.records);
  } else {
    std::ofstream f = open_out(report, false);
    peano::write_report(f, outcome.records);
  }

  std::ostream& log = std::cerr;
  log << outcome.records.size() << " checks, " << outcome.mismatches
      << " mismatches (" << outcome.suspect_mismatches << " on known-suspect table entries)\n";
  for (const peano::VerificationRecord& r : outcome.records) {
    if (!r.match) {
      log << "  mismatch: suite=" << r.suite << " n=" << r.n << " pattern="
          << r.pattern << " oracle=" << r.oracle << " formula=" << r.formula
          << '\n';
    }
  }
  switch (outcome.status) {
    case peano::VerifyStatus::all_match:
      log << "status: all matched\n";
      break;
    case peano::VerifyStatus::suspect_only:
      log << "status: only known-suspect entries mismatched\n";
      break;
    case peano::VerifyStatus::unexpected_mismatch:
      log << "status: UNEXPECTED mismatch\n";
      break;
  }
  return peano::exit_code(outcome.status);
}

int cmd_render(int n, const std::string& out) {
  std::ofstream f = open_out(out, false);
  f << peano::render_svg(n);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Peano-curve iteration words: generation, pattern counting, "
               "closed-form evaluation and cross-verification"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write X_n as text or packed binary");
  int gen_n = 1;
  std::string gen_format = "text", gen_out;
  gen->add_option("--n", gen_n, "iteration index (1..31)")->required();
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"text", "packed"}));
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  // count
  auto* cnt = app.add_subcommand("count", "count occurrences of a pattern");
  std::optional<int> cnt_n;
  std::string cnt_file, cnt_pattern, cnt_method = "auto";
  auto* cnt_n_opt = cnt->add_option("--n", cnt_n, "count in X_n");
  auto* cnt_file_opt =
      cnt->add_option("--word-file", cnt_file, "count in a word read from a file");
  cnt->add_option("--pattern", cnt_pattern, "pattern, e.g. \"2-31\" or \"[1-2^3)\"")
      ->required();
  cnt->add_option("--method", cnt_method, "counting method")
      ->check(CLI::IsMember({"dp", "naive", "fast", "auto"}));
  cnt_n_opt->excludes(cnt_file_opt);
  cnt_file_opt->excludes(cnt_n_opt);

  // frequencies
  auto* freq = app.add_subcommand("frequencies", "per-letter counts of X_n");
  int freq_n = 1;
  std::string freq_method = "oracle";
  freq->add_option("--n", freq_n, "iteration index")->required();
  freq->add_option("--method", freq_method, "oracle scans the word")
      ->check(CLI::IsMember({"oracle", "formula", "recurrence"}));

  // stats
  auto* stats = app.add_subcommand("stats", "rises/descents/equals of X_n (streaming)");
  int stats_n = 1;
  stats->add_option("--n", stats_n, "iteration index (1..31)")->required();

  // formula
  auto* form = app.add_subcommand("formula", "evaluate a closed form");
  std::string form_name, form_kind;
  int form_n = 1;
  unsigned form_l = 0;
  std::optional<int> form_x, form_y, form_z;
  form->add_option("--name", form_name, "which closed form")
      ->required()
      ->check(CLI::IsMember({"lemma1", "corollary2", "theorem4", "table"}));
  form->add_option("--n", form_n, "iteration index")->required();
  form->add_option("--l", form_l, "run length l");
  form->add_option("--x", form_x, "pattern letter x");
  form->add_option("--y", form_y, "pattern letter y");
  form->add_option("--z", form_z, "pattern letter z (tau3)");
  form->add_option("--kind", form_kind, "anchored family")
      ->check(CLI::IsMember({"tau1", "tau2", "tau3"}));

  // verify
  auto* ver = app.add_subcommand("verify", "run oracle-vs-formula suites");
  std::string ver_suites = "all", ver_report;
  int ver_max_n = 6, ver_workers = 1;
  unsigned ver_max_l = 4;
  ver->add_option("--suites", ver_suites,
                  "comma list: frequencies,rises,powers,tables,lemma3,all");
  ver->add_option("--max-n", ver_max_n, "largest iteration per suite");
  ver->add_option("--max-l", ver_max_l, "largest run length l");
  ver->add_option("--workers", ver_workers, "parallel workers");
  ver->add_option("--report", ver_report, "JSONL report file (default: stdout)");

  // render
  auto* ren = app.add_subcommand("render", "draw X_n as an SVG polyline");
  int ren_n = 1;
  std::string ren_out;
  ren->add_option("--n", ren_n, "iteration index (1..10)")->required();
  ren->add_option("--out", ren_out, "output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_n, gen_format, gen_out);
    if (cnt->parsed()) {
      if (!cnt_n && cnt_file.empty()) {
        std::cerr << "count requires --n or --word-file\n";
        return kUsageError;
      }
      return cmd_count(cnt_n, cnt_file, cnt_pattern, cnt_method);
    }
    if (freq->parsed()) return cmd_frequencies(freq_n, freq_method);
    if (stats->parsed()) return cmd_stats(stats_n);
    if (form->parsed()) {
      return cmd_formula(form_name, form_n, form_l, form_kind, form_x, form_y,
                         form_z);
    }
    if (ver->parsed()) {
      return cmd_verify(ver_suites, ver_max_n, ver_max_l, ver_workers, ver_report);
    }
    if (ren->parsed()) return cmd_render(ren_n, ren_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
