// lrauzy — build and verify factor graphs of infinite binary words.
//
// Subcommands:
//   build    write an ℓ-Rauzy graph as DOT or JSON
//   verify   run the structural-law suites over a (k, ℓ) sweep
//   locate   closed-form occurrence positions of a Fibonacci-word factor
//   witness  reachability witnesses on the step-(k−ℓ) path from position 1

#include "lrauzy/export.hpp"
#include "lrauzy/fibnum.hpp"
#include "lrauzy/graph.hpp"
#include "lrauzy/locations.hpp"
#include "lrauzy/verify.hpp"
#include "lrauzy/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace lrauzy;
using nlohmann::ordered_json;

std::size_t prefix_limit_from_env() {
    const char* value = std::getenv("LRAUZY_MAX_PREFIX");
    if (!value)
        return std::size_t{1} << 26;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end == value || *end != '\0' || parsed == 0)
        throw std::invalid_argument(
            "LRAUZY_MAX_PREFIX must be a positive integer");
    return static_cast<std::size_t>(parsed);
}

std::size_t checked_prefix_len(std::size_t need, std::size_t limit) {
    if (need > limit)
        throw std::invalid_argument(
            "requested prefix of " + std::to_string(need) +
            " symbols exceeds LRAUZY_MAX_PREFIX=" + std::to_string(limit));
    return need;
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file: " + path);
    os << body;
    if (!os)
        throw std::runtime_error("failed writing output file: " + path);
}

int cmd_build(const std::string& word, std::size_t k, std::size_t ell,
              const std::string& format, const std::string& out_path,
              std::size_t limit) {
    WordSpec spec = parse_word_source(word);
    std::size_t need =
        checked_prefix_len(recommended_prefix(spec, 2 * k - ell), limit);
    WordPrefix w = realize(spec, need);
    DirectedGraph g = build_l_rauzy(w, k, ell);
    GraphMeta meta{word_spec_name(spec), k, ell};
    write_output(out_path, format == "dot" ? to_dot(g, meta) : to_json(g, meta));
    return 0;
}

int cmd_verify(const VerifyOptions& options) {
    VerifyOutcome outcome = run_verify(options, std::cout);
    return outcome.pass() ? 0 : 1;
}

int cmd_factors(const std::string& word, std::size_t k,
                const std::string& out_path, std::size_t limit) {
    WordSpec spec = parse_word_source(word);
    std::size_t need =
        checked_prefix_len(recommended_prefix(spec, k), limit);
    WordPrefix w = realize(spec, need);
    write_output(out_path, to_json(factors(w, k), word_spec_name(spec)));
    return 0;
}

int cmd_locate(const std::string& factor, std::uint64_t t_max,
               std::size_t limit) {
    if (!is_binary_word(factor) || factor.empty())
        throw std::invalid_argument("locate: factor must be a nonempty "
                                    "binary word");
    std::size_t k = factor.size();
    if (k < 2)
        throw std::invalid_argument("locate: factor must have length >= 2");

    WordPrefix w =
        fibonacci_prefix(checked_prefix_len(fibonacci_prefix_policy(k), limit));
    FactorSet fs = factors(w, k);
    auto index = fs.index_of(factor);
    if (!index) {
        std::cerr << "locate: " << factor
                  << " is not a factor of the fibonacci word\n";
        return 1;
    }
    std::size_t j = *index + 1;
    LocationForm form = location_form(j, k);
    std::vector<Pos> positions = locations(j, k, t_max);

    // verify every generated position against the word itself
    Pos max_pos = positions.back();
    WordPrefix scan =
        fibonacci_prefix(checked_prefix_len(max_pos + k - 1, limit));
    bool verified = true;
    for (Pos p : positions)
        verified = verified && scan.window(p, k) == factor;

    ordered_json j_out;
    j_out["factor"] = factor;
    j_out["k"] = k;
    j_out["j"] = j;
    j_out["first_occurrence"] = first_occurrence(j, k);
    j_out["form"] = {{"b", form.t_coeff},
                     {"c", form.beatty_coeff},
                     {"d", form.offset}};
    j_out["positions"] = positions;
    j_out["verified"] = verified;
    std::cout << j_out.dump(2) << "\n";
    return verified ? 0 : 1;
}

int cmd_witness(std::size_t k, std::size_t ell,
                std::optional<std::uint64_t> bound_opt) {
    if (k < 2 || ell < 1 || ell > k - 1)
        throw std::invalid_argument("witness: need k >= 2 and 1 <= ell <= k-1");
    std::uint64_t bound =
        bound_opt ? *bound_opt : default_search_bound(k, ell);
    bool all_found = true;
    for (std::size_t j = 1; j <= k + 1; ++j) {
        ordered_json line;
        line["k"] = k;
        line["ell"] = ell;
        line["j"] = j;
        auto wit = reach_witness(k, ell, j, bound);
        if (wit) {
            line["factor"] = wit->factor;
            line["m"] = wit->m;
            line["t"] = wit->t;
            line["position"] = wit->position;
            line["verified"] = wit->verified;
            all_found = all_found && wit->verified;
        } else {
            line["error"] = "no witness within t <= " + std::to_string(bound);
            all_found = false;
        }
        std::cout << line.dump() << "\n";
    }
    ordered_json summary;
    summary["summary"] = true;
    summary["k"] = k;
    summary["ell"] = ell;
    summary["vertices"] = k + 1;
    summary["all_reachable_from_v1"] = all_found;
    std::cout << summary.dump() << "\n";
    if (!all_found)
        std::cerr << "witness: search exhausted; at least one vertex lacks a "
                     "verified witness\n";
    return all_found ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"factor graphs of infinite binary words"};
    app.require_subcommand(1);

    std::string word = "fibonacci";
    std::size_t k = 4;
    std::size_t ell = 1;
    std::string format = "dot";
    std::string out_path = "-";
    VerifyOptions verify_options;
    std::string checks_csv;
    std::string factor;
    std::uint64_t t_max = 10;
    std::optional<std::uint64_t> search_bound;

    CLI::App* build = app.add_subcommand(
        "build", "construct an l-Rauzy graph and write DOT or JSON");
    build->add_option("--word", word, "word source: fibonacci | fibonacci-c | "
                                      "thue-morse | periodic:<x> | literal:<w>");
    build->add_option("--k", k, "vertex length")->required();
    build->add_option("--ell", ell, "overlap length (k-1 gives the Rauzy graph)")
        ->required();
    build->add_option("--format", format, "dot | json")
        ->check(CLI::IsMember({"dot", "json"}));
    build->add_option("--out", out_path, "output path, '-' for stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "sweep 2 <= k <= k-max, 1 <= ell <= k-1 and report one "
                  "JSON line per check");
    verify->add_option("--word", verify_options.word, "word source");
    verify->add_option("--k-max", verify_options.k_max, "largest vertex length")
        ->check(CLI::Range(std::size_t{2}, std::size_t{200}));
    verify->add_option("--checks", checks_csv,
                       "comma-separated subset of: counts,degrees,closed-form,"
                       "complement-iso,psi,connectivity,locations,witnesses");
    verify->add_option("--search-bound", verify_options.search_bound_factor,
                       "witness bound multiplier on (k-ell)");

    CLI::App* factors_cmd = app.add_subcommand(
        "factors", "list the distinct length-k factors of a word in "
                   "first-occurrence order");
    factors_cmd->add_option("--word", word, "word source");
    factors_cmd->add_option("--k", k, "factor length")->required();
    factors_cmd->add_option("--out", out_path, "output path, '-' for stdout");

    CLI::App* locate = app.add_subcommand(
        "locate", "closed-form locations of a factor of the fibonacci word");
    locate->add_option("factor", factor, "binary factor, e.g. 1010")
        ->required();
    locate->add_option("--t-max", t_max, "evaluate the form for t = 0..t-max");

    CLI::App* witness = app.add_subcommand(
        "witness", "per-vertex reachability witnesses for the fibonacci word");
    witness->add_option("--k", k, "vertex length")->required();
    witness->add_option("--ell", ell, "overlap length")->required();
    witness->add_option("--search-bound", search_bound,
                        "largest t tried (default 10*(k-ell))");

    CLI11_PARSE(app, argc, argv);

    try {
        std::size_t limit = prefix_limit_from_env();
        if (build->parsed())
            return cmd_build(word, k, ell, format, out_path, limit);
        if (verify->parsed()) {
            if (!checks_csv.empty()) {
                std::size_t start = 0;
                while (start <= checks_csv.size()) {
                    std::size_t comma = checks_csv.find(',', start);
                    std::string piece = checks_csv.substr(
                        start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
                    auto c = parse_check(piece);
                    if (!c)
                        throw std::invalid_argument("unknown check: " + piece);
                    verify_options.checks.push_back(*c);
                    if (comma == std::string::npos)
                        break;
                    start = comma + 1;
                }
            }
            verify_options.max_prefix = limit;
            return cmd_verify(verify_options);
        }
        if (factors_cmd->parsed())
            return cmd_factors(word, k, out_path, limit);
        if (locate->parsed())
            return cmd_locate(factor, t_max, limit);
        if (witness->parsed())
            return cmd_witness(k, ell, search_bound);
    } catch (const std::exception& e) {
        std::cerr << "lrauzy: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
