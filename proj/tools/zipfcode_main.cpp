// zipfcode: optimal coding, random typing and Zipf-exponent estimation.
//
// Subcommands: generate, types, code, fit, analyze, predict, verify.
// All randomized subcommands take --seed and default to a fixed value,
// so identical invocations produce byte-identical output.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zipfcode/zipfcode.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

// "MIN:MAX" -> pair
std::pair<std::uint64_t, std::uint64_t> parse_ranks(const std::string &spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw zipfcode::invalid_parameter("rank window must be MIN:MAX");
  try {
    std::uint64_t lo = std::stoull(spec.substr(0, colon));
    std::uint64_t hi = std::stoull(spec.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception &) {
    throw zipfcode::invalid_parameter("rank window must be MIN:MAX");
  }
}

std::uint64_t type_cap_from_env() {
  if (const char *cap = std::getenv("ZIPFCODE_MAX_TYPES"))
    return std::stoull(cap);
  return 10'000'000;
}

// Output sink: a file when -o is given, stdout otherwise.
class Output {
public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_)
        throw zipfcode::invalid_parameter("cannot open output file: " + path);
    }
  }
  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::string slurp(const std::string &path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw zipfcode::invalid_parameter("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json fit_to_json(const zipfcode::FitResult &fit) {
  json j{{"alpha", fit.alpha},
         {"method", fit.method == zipfcode::FitMethod::mle ? "mle"
                                                           : "regression"},
         {"rank_window", {fit.rank_min, fit.rank_max}},
         {"ks_statistic", fit.ks_statistic},
         {"at_boundary", fit.at_boundary}};
  if (fit.method == zipfcode::FitMethod::mle)
    j["log_likelihood"] = fit.log_likelihood;
  return j;
}

json report_to_json(const zipfcode::DerivationReport &report) {
  json decades = json::array();
  for (const auto &d : report.per_decade)
    decades.push_back(
        {{"rank_min", d.rank_min}, {"rank_max", d.rank_max}, {"slope", d.slope}});
  return json{{"N", report.alphabet_size},
              {"rank_min", report.rank_min},
              {"rank_max", report.rank_max},
              {"slope", report.slope},
              {"degenerate", report.degenerate},
              {"max_abs_residual", report.max_abs_residual},
              {"per_decade_slopes", decades}};
}

zipfcode::RankFrequencyTable load_table(const std::string &path,
                                        bool as_tokens) {
  if (as_tokens) {
    std::istringstream in(slurp(path));
    auto tokens = zipfcode::read_tokens(in);
    if (tokens.empty())
      throw zipfcode::invalid_parameter("empty-input: no tokens in " + path);
    return zipfcode::build_rank_frequency(tokens);
  }
  std::istringstream in(slurp(path));
  auto table = zipfcode::read_rank_frequency(in);
  if (table.entries.empty())
    throw zipfcode::invalid_parameter("empty-input: no rows in " + path);
  return table;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Optimal coding, random typing and Zipf's law toolkit"};
  app.require_subcommand(1);

  int n = 26;
  int n_prime = 26;
  double ps = 0.18;
  int l0 = 1;
  double alpha = 1.0;
  std::uint64_t vocab = 1000;
  std::uint64_t n_tokens = 100000;
  std::uint64_t top_k = 100;
  std::uint64_t seed = kDefaultSeed;
  std::string ranks_spec;
  std::string input_path, output_path, table_path;
  std::string format = "json";
  std::string scheme = "nonsingular";
  std::string method = "mle";
  std::string model = "random-typing";
  bool as_tokens = false;
  bool self_test = false;
  double threshold = 0.05;

  auto *generate = app.add_subcommand("generate", "Sample random-typing tokens");
  generate->add_option("-N,--alphabet-size", n);
  generate->add_option("--ps", ps);
  generate->add_option("--l0", l0);
  generate->add_option("-n,--tokens", n_tokens);
  generate->add_option("--seed", seed);
  generate->add_option("-o,--output", output_path);

  auto *types = app.add_subcommand("types", "Analytic random-typing type table");
  types->add_option("-N,--alphabet-size", n);
  types->add_option("--ps", ps);
  types->add_option("--l0", l0);
  types->add_option("-k,--top", top_k);
  types->add_option("-o,--output", output_path);

  auto *code = app.add_subcommand("code", "Optimal code from a frequency CSV");
  code->add_option("input", input_path, "word,count CSV (default stdin)");
  code->add_option("-N,--alphabet-size", n);
  code->add_option("--scheme", scheme)
      ->check(CLI::IsMember({"nonsingular", "shannon", "huffman"}));
  code->add_option("-o,--output", output_path);

  auto *fit = app.add_subcommand("fit", "Estimate the Zipf exponent");
  fit->add_option("input", input_path,
                  "rank,word,count CSV or token file (default stdin)");
  fit->add_flag("--tokens-input", as_tokens,
                "treat input as newline-delimited tokens");
  fit->add_option("--method", method)->check(CLI::IsMember({"mle", "regression"}));
  fit->add_option("--ranks", ranks_spec, "rank window MIN:MAX");
  fit->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  fit->add_option("-o,--output", output_path);

  auto *analyze = app.add_subcommand("analyze", "Corpus mean-length report");
  analyze->add_option("input", input_path, "plain-text file (default stdin)");
  analyze->add_option("-N,--alphabet-size", n,
                      "baseline alphabet size (default: observed inventory)")
      ->default_val(0);
  analyze->add_option("--table", table_path, "also write rank,word,count CSV");
  analyze->add_option("-o,--output", output_path);

  auto *predict = app.add_subcommand("predict", "Theoretical Zipf exponents");
  predict->add_option("--model", model)
      ->check(CLI::IsMember({"random-typing", "mixed-alphabet"}));
  predict->add_option("-N,--alphabet-size", n);
  predict->add_option("--ps", ps);
  predict->add_option("--nprime", n_prime);

  auto *verify = app.add_subcommand("verify", "Check the derivation numerically");
  verify->add_option("-N,--alphabet-size", n);
  verify->add_option("--ranks", ranks_spec, "rank window MIN:MAX")
      ->default_str("1000:1000000");
  verify->add_flag("--self-test", self_test,
                   "generate -> fit -> compare against the predicted exponent");
  verify->add_option("--ps", ps);
  verify->add_option("--l0", l0);
  verify->add_option("-n,--tokens", n_tokens);
  verify->add_option("--seed", seed);
  verify->add_option("--threshold", threshold);
  verify->add_option("-o,--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code_ = app.exit(e);
    return code_ == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) {
      zipfcode::RandomTypingParams params(n, ps, l0);
      auto tokens = zipfcode::sample_tokens(params, n_tokens, seed);
      Output out(output_path);
      zipfcode::write_tokens(out.stream(), tokens);
    } else if (types->parsed()) {
      zipfcode::RandomTypingParams params(n, ps, l0);
      auto table = zipfcode::enumerate_types(params, top_k, type_cap_from_env());
      Output out(output_path);
      zipfcode::write_type_table(out.stream(), table);
    } else if (code->parsed()) {
      std::istringstream in(slurp(input_path));
      auto counts = zipfcode::read_word_counts(in);
      if (counts.empty())
        throw zipfcode::invalid_parameter("empty-input: no frequency rows");
      std::vector<double> values;
      for (const auto &wc : counts)
        values.push_back(static_cast<double>(wc.count));
      Output out(output_path);
      if (scheme == "nonsingular") {
        zipfcode::write_code(out.stream(), zipfcode::nonsingular_optimal_code(
                                               counts.size(), n));
      } else {
        auto dist = zipfcode::distribution_from_counts(values);
        auto lengths = scheme == "shannon" ? zipfcode::shannon_lengths(dist, n)
                                           : zipfcode::huffman_lengths(dist, n);
        zipfcode::write_lengths(out.stream(), lengths);
      }
    } else if (fit->parsed()) {
      auto table = load_table(input_path, as_tokens);
      std::uint64_t lo = 1, hi = table.entries.size();
      if (!ranks_spec.empty())
        std::tie(lo, hi) = parse_ranks(ranks_spec);
      auto result = method == "mle" ? zipfcode::fit_zipf_mle(table, lo, hi)
                                    : zipfcode::fit_zipf_regression(table, lo, hi);
      Output out(output_path);
      if (format == "json") {
        out.stream() << fit_to_json(result).dump(2) << '\n';
      } else {
        out.stream() << "alpha,method,rank_min,rank_max,ks_statistic\n"
                     << result.alpha << ',' << method << ',' << result.rank_min
                     << ',' << result.rank_max << ',' << result.ks_statistic
                     << '\n';
      }
    } else if (analyze->parsed()) {
      auto tokens = zipfcode::tokenize(slurp(input_path));
      auto stats = zipfcode::corpus_report(tokens, n);
      if (!table_path.empty()) {
        std::ofstream tout(table_path, std::ios::binary);
        if (!tout)
          throw zipfcode::invalid_parameter("cannot open table file: " +
                                            table_path);
        zipfcode::write_rank_frequency(tout, stats.table);
      }
      json j{{"types", stats.table.entries.size()},
             {"tokens", stats.table.total_tokens},
             {"alphabet_size", stats.alphabet_size_used},
             {"actual_mean_length", stats.actual_mean_length},
             {"optimal_ns_mean_length", stats.optimal_ns_mean_length},
             {"optimal_ud_mean_length", stats.optimal_ud_mean_length},
             {"optimality_ratio", stats.optimality_ratio}};
      Output out(output_path);
      out.stream() << j.dump(2) << '\n';
    } else if (predict->parsed()) {
      double value = model == "random-typing"
                         ? zipfcode::random_typing_exponent(n, ps)
                         : zipfcode::mixed_alphabet_exponent(n, n_prime);
      std::cout << "alpha=" << value << '\n';
    } else if (verify->parsed()) {
      Output out(output_path);
      if (self_test) {
        zipfcode::RandomTypingParams params(n, ps, l0);
        auto tokens = zipfcode::sample_tokens(params, n_tokens, seed);
        auto table = zipfcode::build_rank_frequency(tokens);
        std::uint64_t hi = std::min<std::uint64_t>(1000, table.entries.size());
        auto fitres = zipfcode::fit_zipf_mle(table, 1, hi);
        double predicted = zipfcode::random_typing_exponent(n, ps);
        double error = std::abs(fitres.alpha - predicted);
        json j{{"N", n},           {"ps", ps},
               {"l0", l0},         {"tokens", n_tokens},
               {"seed", seed},     {"alpha_fit", fitres.alpha},
               {"alpha_predicted", predicted},
               {"abs_error", error}, {"threshold", threshold},
               {"pass", error <= threshold}};
        out.stream() << j.dump(2) << '\n';
        if (error > threshold) {
          std::cerr << "self-test failed: |alpha_fit - alpha_predicted| = "
                    << error << " > " << threshold << '\n';
          return 1;
        }
      } else {
        std::uint64_t lo = 1000, hi = 1000000;
        if (!ranks_spec.empty())
          std::tie(lo, hi) = parse_ranks(ranks_spec);
        auto report = zipfcode::verify_derivation(n, lo, hi);
        out.stream() << report_to_json(report).dump(2) << '\n';
      }
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
