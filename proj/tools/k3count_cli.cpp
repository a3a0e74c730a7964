// k3count: tables, enumerations and identity checks for the rational-curve
// counting series N_g and the S-chain configuration model behind it.
//
// Subcommands:
//   ng         exact N_g table (two independent computation paths must agree)
//   enumerate  configurations of a given weight, lambda or mu side
//   delta      delta-invariant lower bound report for one mu-configuration
//   verify     the full identity suite
//
// Exit codes: 0 success, 1 verification/cross-check failure, 2 usage/parse
// error. All results go to stdout (or --out); diagnostics and timing go to
// stderr so stdout stays byte-deterministic.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3count/k3count.hpp"

namespace {

using nlohmann::ordered_json;

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// ---------------------------------------------------------------------------
// JSON encodings of configurations

ordered_json lambda_to_json(const k3count::LambdaConfig& c) {
    return ordered_json{{"mu", c.mu}, {"lambda_pos", c.lambda_pos}, {"lambda_neg", c.lambda_neg}};
}

ordered_json mu_to_json(const k3count::MuConfig& c) {
    return ordered_json{{"mu", c.mu}, {"mu_neg", c.mu_neg}, {"mu_pos", c.mu_pos}};
}

std::vector<int> int_array(const ordered_json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw std::invalid_argument("expected an integer array field \"" + key + "\"");
    std::vector<int> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number_integer())
            throw std::invalid_argument("field \"" + key + "\" must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

k3count::MuConfig mu_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("mu") || !j.at("mu").is_number_integer())
        throw std::invalid_argument("expected an object with integer field \"mu\"");
    k3count::MuConfig c;
    c.mu = j.at("mu").get<int>();
    c.mu_neg = int_array(j, "mu_neg");
    c.mu_pos = int_array(j, "mu_pos");
    return c;
}

// ---------------------------------------------------------------------------
// ng

int cmd_ng(unsigned max_genus, const std::string& format, const std::string& out_path) {
    using namespace k3count;
    const QSeries fast = ng_series_fast(max_genus);
    // Independent route: 24th power of the inverted product instead of the
    // inverted 24th power.
    const QSeries conv = pow(partition_series_fast(max_genus), 24);
    if (!(fast == conv)) {
        std::cerr << "ng: cross-path disagreement between the inverted 24th power "
                     "and the 24th power of the inverse\n";
        return 1;
    }

    std::ostringstream os;
    if (format == "csv") {
        os << "g,N_g\n";
        for (unsigned g = 0; g <= max_genus; ++g)
            os << g << "," << fast.coefficient(g).str() << "\n";
    } else {
        os << "[\n";
        for (unsigned g = 0; g <= max_genus; ++g) {
            os << ordered_json{{"g", g}, {"Ng", fast.coefficient(g).str()}}.dump();
            os << (g == max_genus ? "\n" : ",\n");
        }
        os << "]\n";
    }

    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "ng: cannot open output file " << out_path << "\n";
            return 2;
        }
        f << os.str();
    }
    return 0;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(int m, const std::string& side, bool admissible) {
    using namespace k3count;
    std::ostringstream os;
    std::size_t count = 0;
    os << "[\n";
    if (side == "lambda") {
        const auto configs = enumerate_lambda_configs(m);
        count = configs.size();
        for (std::size_t i = 0; i < configs.size(); ++i)
            os << lambda_to_json(configs[i]).dump() << (i + 1 == configs.size() ? "\n" : ",\n");
    } else {
        const auto configs = enumerate_mu_configs(m, admissible);
        count = configs.size();
        for (std::size_t i = 0; i < configs.size(); ++i)
            os << mu_to_json(configs[i]).dump() << (i + 1 == configs.size() ? "\n" : ",\n");
    }
    os << "]\n";
    os << "count=" << count << " P(" << m << ")=" << partition_p(m).str() << "\n";
    std::cout << os.str();
    return 0;
}

// ---------------------------------------------------------------------------
// delta

int cmd_delta(const std::string& config_arg) {
    using namespace k3count;
    std::string text;
    if (config_arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(config_arg);
        if (!f) {
            std::cerr << "delta: cannot open " << config_arg << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }

    MuConfig c;
    try {
        c = mu_from_json(ordered_json::parse(text));
    } catch (const std::exception& e) {
        std::cerr << "delta: malformed configuration: " << e.what() << "\n";
        return 2;
    }
    if (!is_valid_mu(c)) {
        std::cerr << "delta: invalid configuration (lists must be weakly decreasing and "
                     "positive, with mu_0 <= mu <= mu_0+1 and mu_-1 <= mu <= mu_-1+1)\n";
        return 2;
    }

    const long long m = weight(c);
    const long long bound = delta_lower_bound(c);
    const bool admissible = is_admissible_mu(c);
    std::cout << "m=" << m << " B=" << bound << " admissible=" << (admissible ? "true" : "false")
              << " equality=" << (bound == m ? "true" : "false") << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(std::size_t order, int max_m, int max_n) {
    using namespace k3count;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> checks;
    const auto record = [&checks](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({name, ok, detail});
    };

    // P(m) three ways: enumeration, pentagonal recurrence, series coefficient.
    {
        bool ok = true;
        const QSeries ps = partition_series(static_cast<std::size_t>(max_m));
        for (int m = 0; m <= max_m && ok; ++m) {
            const BigInt p = partition_p(m);
            ok = BigInt(enumerate_partitions(m).size()) == p &&
                 ps.coefficient(static_cast<std::size_t>(m)) == p;
        }
        record("partition-triple", ok,
               "enumeration, pentagonal recurrence and series agree for m<=" + std::to_string(max_m));
    }

    // Lambda-configuration counts.
    {
        bool ok = true;
        for (int m = 0; m <= max_m && ok; ++m)
            ok = BigInt(enumerate_lambda_configs(m).size()) == partition_p(m);
        record("lambda-count", ok, "|lambda configs of weight m| = P(m) for m<=" + std::to_string(max_m));
    }

    // Admissible mu-configuration counts, against P(m) and the dual series.
    {
        bool ok = true;
        const QSeries dual = dual_counting_series(static_cast<std::size_t>(max_m));
        for (int m = 0; m <= max_m && ok; ++m) {
            const BigInt n = BigInt(enumerate_mu_configs(m, true).size());
            ok = n == partition_p(m) && n == dual.coefficient(static_cast<std::size_t>(m));
        }
        record("mu-count-dual", ok,
               "|admissible mu configs| = P(m) = dual series coefficient for m<=" + std::to_string(max_m));
    }

    // Duality round trips and its inverse, weight and mu preserved.
    {
        bool ok = true;
        for (int m = 0; m <= max_m && ok; ++m) {
            auto lambdas = enumerate_lambda_configs(m);
            std::vector<LambdaConfig> images;
            for (const auto& c : enumerate_mu_configs(m, true)) {
                const LambdaConfig l = mu_to_lambda(c);
                ok = ok && is_valid_lambda(l) && weight(l) == weight(c) && l.mu == c.mu &&
                     lambda_to_mu(l) == c;
                images.push_back(l);
            }
            const auto key = [](const LambdaConfig& a, const LambdaConfig& b) {
                return std::tie(a.mu, a.lambda_pos, a.lambda_neg) <
                       std::tie(b.mu, b.lambda_pos, b.lambda_neg);
            };
            std::sort(images.begin(), images.end(), key);
            std::sort(lambdas.begin(), lambdas.end(), key);
            ok = ok && images == lambdas;
        }
        record("duality-roundtrip", ok,
               "mu<->lambda is a weight- and mu-preserving bijection for m<=" + std::to_string(max_m));
    }

    // Functional equation and the three routes to C_{0,n}.
    {
        bool feq = true, triple = true, stab = true;
        const QSeries ps = partition_series(order);
        for (int n = 0; n <= max_n; ++n) {
            const LaurentBundle g = expand_G(n, order);
            feq = feq && check_functional_equation(g);
            const QSeries direct = g.at(0);
            const QSeries rec = recursion_C0(n, order);
            const QSeries closed = closed_form_C0(n, order);
            triple = triple && rec == closed && closed == direct;
            const std::size_t upto = std::min<std::size_t>(order, static_cast<std::size_t>(n));
            for (std::size_t d = 0; d <= upto; ++d)
                stab = stab && closed.coefficient(d) == ps.coefficient(d);
        }
        record("functional-equation", feq,
               "(z+q^n)G_n(q,qz) = (1+q^{n+1}z)G_n(q,z) coefficientwise for n<=" + std::to_string(max_n));
        record("c0-three-way", triple,
               "recursion, closed form and direct expansion of C_{0,n} agree for n<=" + std::to_string(max_n));
        record("c0-stabilization", stab,
               "C_{0,n} matches the partition series through degree n for n<=" + std::to_string(max_n));
    }

    // Durfee-type identity.
    record("durfee-identity", verify_durfee_identity(order),
           "dual counting series = partition series through order " + std::to_string(order));

    // Delta bound law over every valid configuration.
    {
        bool ok = true;
        for (int m = 0; m <= max_m && ok; ++m)
            for (const auto& c : enumerate_mu_configs(m, false)) {
                const long long b = delta_lower_bound(c);
                ok = b >= m && (b == m) == is_admissible_mu(c);
                if (!ok) break;
            }
        record("delta-bound-law", ok,
               "B >= m with equality exactly on admissible configs for m<=" + std::to_string(max_m));
    }

    // N_g by explicit product, by 24-fold convolution, by the fast path.
    {
        const QSeries a = ng_series(order);
        const QSeries b = ng_via_convolution(order);
        const QSeries c = ng_series_fast(order);
        record("ng-cross-path", a == b && b == c,
               "product, convolution and fast paths agree through genus " + std::to_string(order));
    }

    std::ostringstream os;
    os << "command: verify\n";
    os << "parameters: order=" << order << " max_m=" << max_m << " max_n=" << max_n << "\n";
    std::size_t passed = 0;
    for (const auto& c : checks) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        if (c.passed) ++passed;
    }
    os << "result: " << passed << "/" << checks.size() << " checks passed\n";
    std::cout << os.str();

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
    return passed == checks.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series identities and S-chain configuration counts "
                 "for rational curves on K3 surfaces"};
    app.require_subcommand(1);

    // ng
    auto* ng = app.add_subcommand("ng", "Print the table of rational-curve counts N_g");
    unsigned max_genus = 0;
    std::string format = "csv";
    std::string out_path;
    ng->add_option("--max-genus", max_genus, "Highest genus to tabulate")->required();
    ng->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    ng->add_option("--out", out_path, "Write output to a file instead of stdout");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List configurations of a given weight");
    int m = 0;
    std::string side;
    bool admissible = false;
    enumerate->add_option("--m", m, "Configuration weight")->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--side", side, "Configuration encoding")->required()
        ->check(CLI::IsMember({"lambda", "mu"}));
    enumerate->add_flag("--admissible", admissible, "Mu side: admissible configurations only");

    // delta
    auto* delta = app.add_subcommand("delta", "Delta-invariant lower bound of one mu-configuration");
    std::string config_arg;
    delta->add_option("--config", config_arg, "JSON file with the configuration, or - for stdin")
        ->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run the full identity suite");
    std::size_t order = 40;
    int max_m = 12;
    int max_n = 8;
    verify->add_option("--order", order, "q-series truncation order");
    verify->add_option("--max-m", max_m, "Largest configuration weight checked")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", max_n, "Largest product truncation index checked")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(ng)) return cmd_ng(max_genus, format, out_path);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(m, side, admissible);
        if (app.got_subcommand(delta)) return cmd_delta(config_arg);
        return cmd_verify(order, max_m, max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
