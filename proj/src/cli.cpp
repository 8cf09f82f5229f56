#include "ccsg/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccsg/attack.hpp"
#include "ccsg/automata.hpp"
#include "ccsg/keystream.hpp"
#include "ccsg/lfsr.hpp"
#include "ccsg/linearize.hpp"
#include "ccsg/phaseshift.hpp"

namespace ccsg::cli {

namespace {

using nlohmann::json;

template <typename F>
auto named(const char* flag, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string(flag) + ": " + e.what());
    }
}

std::vector<int> parse_taps(const std::string& text) {
    std::vector<int> taps;
    if (text.empty()) return taps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty tap index");
        item = item.substr(a, b - a + 1);
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v < 0) throw std::invalid_argument("bad tap index '" + item + "'");
        taps.push_back(v);
    }
    return taps;
}

void validate_taps(const std::vector<int>& taps, int l1) {
    for (size_t j = 0; j < taps.size(); ++j) {
        if (taps[j] < 0 || taps[j] >= l1)
            throw std::invalid_argument("--taps: index out of range for l1 = " + std::to_string(l1));
        if (j > 0 && taps[j] <= taps[j - 1])
            throw std::invalid_argument("--taps: indices must be strictly ascending");
    }
}

std::string folded(const std::string& bits, int width) {
    if (width <= 0 || bits.size() <= static_cast<size_t>(width)) return bits;
    std::string out;
    for (size_t i = 0; i < bits.size(); i += width) {
        if (i) out += '\n';
        out += bits.substr(i, width);
    }
    return out;
}

struct GeneratorFlags {
    std::string p1, seed1, p2, seed2, taps;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--p1", p1, "characteristic polynomial of the control register")->required();
        cmd->add_option("--seed1", seed1, "initial output bits of the control register")->required();
        cmd->add_option("--p2", p2, "characteristic polynomial of the generating register")->required();
        cmd->add_option("--seed2", seed2, "initial output bits of the generating register")->required();
        cmd->add_option("--taps", taps, "control stages driving the clock, e.g. \"0,1,2\" (empty: plain shrinking generator)");
    }

    CcsgSpec build() const {
        BinaryPolynomial poly1 = named("--p1", [&] { return parse_poly(p1); });
        BinaryPolynomial poly2 = named("--p2", [&] { return parse_poly(p2); });
        Bits s1 = named("--seed1", [&] { return bits_from_string(seed1); });
        Bits s2 = named("--seed2", [&] { return bits_from_string(seed2); });
        std::vector<int> t = named("--taps", [&] { return parse_taps(taps); });
        return named("generator flags", [&] {
            return CcsgSpec(LfsrSpec(poly1, s1), LfsrSpec(poly2, s2), t);
        });
    }
};

json report_json(const LinearizationReport& rep) {
    json j{{"l1", rep.l1},
           {"exponent", rep.exponent},
           {"coset_leader", rep.coset_leader},
           {"coset_size", rep.coset_size},
           {"coset_poly", rep.coset_poly.to_string()},
           {"base_pair", {rep.base_pair.first.to_string(), rep.base_pair.second.to_string()}},
           {"final_pair", {rep.final_pair.first.to_string(), rep.final_pair.second.to_string()}},
           {"doublings", rep.doublings},
           {"degenerate_coset", rep.degenerate_coset},
           {"w_equals_l1", rep.w_equals_l1}};
    if (rep.taps_width) j["taps_width"] = *rep.taps_width;
    return j;
}

std::string char_poly_display(const BinaryPolynomial& p) {
    auto [base, power] = two_power_base(p);
    if (power >= 2) return "(" + base.to_string() + ")^" + std::to_string(power);
    return p.to_string();
}

const char* source_name(BitSource s) {
    switch (s) {
        case BitSource::Intercepted: return "intercepted";
        case BitSource::PhaseShift: return "phase-shift";
        case BitSource::InterleaveCompletion: return "interleave-completion";
    }
    return "?";
}

json result_json(const ReconstructionResult& res, size_t listing_limit) {
    json j{{"known_total", res.known.size()},
           {"intercepted", res.count(BitSource::Intercepted)},
           {"phase_shift", res.count(BitSource::PhaseShift)},
           {"interleave_completion", res.count(BitSource::InterleaveCompletion)},
           {"nt_estimate", res.nt_estimate},
           {"horizon", res.horizon}};
    if (res.known.size() <= listing_limit) {
        json positions = json::array();
        for (const auto& [pos, v] : res.known)
            positions.push_back(
                {{"position", pos}, {"bit", int(v)}, {"source", source_name(res.sources.at(pos))}});
        j["positions"] = std::move(positions);
    } else {
        j["positions_suppressed"] = true;
    }
    return j;
}

}  // namespace

BinaryPolynomial parse_poly(const std::string& text) { return BinaryPolynomial::parse(text); }

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"LFSR-based shrinking/clock-controlled generators as linear 90/150 cellular automata"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    GeneratorFlags gen_flags, verify_flags;
    uint64_t gen_n = 0;
    int gen_width = 0;
    CLI::App* gen = app.add_subcommand("gen", "emit keystream bits");
    gen_flags.add_to(gen);
    gen->add_option("--n", gen_n, "number of keystream bits")->required();
    gen->add_option("--width", gen_width, "fold output lines at this width");

    int lin_l1 = 0;
    std::string lin_p2, lin_taps;
    CLI::App* lin = app.add_subcommand("linearize", "derive the pair of 90/150 automata for a generator");
    lin->add_option("--l1", lin_l1, "length of the control register")->required();
    lin->add_option("--p2", lin_p2, "characteristic polynomial of the generating register")->required();
    lin->add_option("--taps", lin_taps, "control stages driving the clock (width selects D)");

    std::string carun_rules, carun_state;
    uint64_t carun_n = 0;
    CLI::App* carun = app.add_subcommand("ca-run", "print the state matrix of an automaton");
    carun->add_option("--rules", carun_rules, "rule string, 0 = rule 90, 1 = rule 150")->required();
    carun->add_option("--state", carun_state, "initial state bits")->required();
    carun->add_option("--n", carun_n, "number of state rows to print")->required();

    std::string cp_rules;
    CLI::App* cp = app.add_subcommand("char-poly", "characteristic polynomial of an automaton");
    cp->add_option("--rules", cp_rules, "rule string")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "check that the linearized automaton replays the generator keystream");
    verify_flags.add_to(verify);
    int verify_cell = 1;
    verify->add_option("--cell", verify_cell, "extraction cell of the automaton (1-indexed)");

    std::string ps_rules;
    CLI::App* ps = app.add_subcommand("phase-shifts", "relative shifts between cells of an automaton");
    ps->add_option("--rules", ps_rules, "rule string")->required();

    int atk_l1 = 0;
    std::string atk_p2, atk_taps, atk_window;
    uint64_t atk_offset = 0;
    bool atk_reverse = false;
    CLI::App* atk = app.add_subcommand("attack", "reconstruct keystream bits from an intercepted window");
    atk->add_option("--l1", atk_l1, "length of the control register")->required();
    atk->add_option("--p2", atk_p2, "characteristic polynomial of the generating register")->required();
    atk->add_option("--taps", atk_taps, "control stages driving the clock");
    atk->add_option("--window", atk_window, "intercepted keystream bits")->required();
    atk->add_option("--offset", atk_offset, "absolute position of the first window bit");
    atk->add_flag("--reverse", atk_reverse, "also process the reversed keystream via the reciprocal pair");

    std::vector<const char*> argv;
    argv.push_back("ccsg");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    bool structured = format == "structured";

    try {
        if (app.got_subcommand(gen)) {
            CcsgSpec spec = gen_flags.build();
            std::string bits = bits_to_string(ccsg_keystream(spec, gen_n));
            if (structured)
                out << json{{"keystream", bits}}.dump(2) << "\n";
            else
                out << folded(bits, gen_width) << "\n";
        } else if (app.got_subcommand(lin)) {
            std::vector<int> taps = named("--taps", [&] { return parse_taps(lin_taps); });
            validate_taps(taps, lin_l1);
            std::optional<int> w;
            if (!taps.empty()) w = static_cast<int>(taps.size());
            BinaryPolynomial p2 = named("--p2", [&] { return parse_poly(lin_p2); });
            LinearizationReport rep = linearize_generator(lin_l1, p2, w);
            if (structured)
                out << report_json(rep).dump(2) << "\n";
            else
                out << rep.to_text();
        } else if (app.got_subcommand(carun)) {
            RuleString rules = named("--rules", [&] { return RuleString::parse(carun_rules); });
            CaState state = named("--state", [&] { return bits_from_string(carun_state); });
            if (carun_n < 1) throw std::invalid_argument("--n: need at least one row");
            auto rows = ca_run(rules, state, carun_n - 1);
            if (structured) {
                json jrows = json::array();
                for (const auto& r : rows) jrows.push_back(bits_to_string(r));
                out << json{{"rules", rules.to_string()}, {"rows", jrows}}.dump(2) << "\n";
            } else {
                for (const auto& r : rows) out << bits_to_string(r) << "\n";
            }
        } else if (app.got_subcommand(cp)) {
            RuleString rules = named("--rules", [&] { return RuleString::parse(cp_rules); });
            BinaryPolynomial delta = ca_char_poly(rules);
            if (structured) {
                auto [base, power] = two_power_base(delta);
                out << json{{"char_poly", delta.to_string()},
                            {"display", char_poly_display(delta)},
                            {"base", base.to_string()},
                            {"power", power}}
                           .dump(2)
                    << "\n";
            } else {
                out << char_poly_display(delta) << "\n";
            }
        } else if (app.got_subcommand(verify)) {
            CcsgSpec spec = verify_flags.build();
            uint64_t period = keystream_period(spec);
            std::optional<int> w;
            if (!spec.taps.empty()) w = spec.width();
            LinearizationReport rep = linearize_generator(spec.r1.length(), spec.r2.char_poly, w);
            const RuleString& rules = rep.final_pair.first;
            uint64_t n_ca = rules.size();
            Bits ks = ccsg_keystream(spec, period + n_ca);
            Bits prefix(ks.begin(), ks.begin() + n_ca);
            CaStateSolution sol = ca_solve_initial_state(rules, verify_cell, prefix);
            Bits column = cell_column(ca_run(rules, sol.state, period + n_ca - 1), verify_cell);
            uint64_t mismatches = 0;
            for (size_t t = 0; t < ks.size(); ++t)
                if (ks[t] != column[t]) ++mismatches;
            int lc = linear_complexity(ks);
            bool pass = mismatches == 0;
            if (structured) {
                out << json{{"period", period},
                            {"linear_complexity", lc},
                            {"ca_length", n_ca},
                            {"cell", verify_cell},
                            {"state_unique", sol.unique},
                            {"mismatches", mismatches},
                            {"replay", pass ? "PASS" : "FAIL"}}
                           .dump(2)
                    << "\n";
            } else {
                out << "period: " << period << "\n";
                out << "linear_complexity: " << lc << "\n";
                out << "ca_length: " << n_ca << "\n";
                out << "state_unique: " << (sol.unique ? "true" : "false") << "\n";
                out << (pass ? "PASS" : "FAIL") << "\n";
            }
            return pass ? 0 : 2;
        } else if (app.got_subcommand(ps)) {
            RuleString rules = named("--rules", [&] { return RuleString::parse(ps_rules); });
            ShiftTable table = phase_shift_table(rules);
            if (structured) {
                json entries = json::array();
                for (const auto& [key, m] : table.entries)
                    entries.push_back({{"cell", key.first}, {"reference", key.second}, {"shift", m}});
                json unrelated = json::array();
                for (const auto& [cell, ref] : table.unrelated)
                    unrelated.push_back({{"cell", cell}, {"reference", ref}});
                out << json{{"entries", entries}, {"unrelated", unrelated}}.dump(2) << "\n";
            } else {
                out << table.to_text();
            }
        } else if (app.got_subcommand(atk)) {
            std::vector<int> taps = named("--taps", [&] { return parse_taps(atk_taps); });
            validate_taps(taps, atk_l1);
            std::optional<int> w;
            if (!taps.empty()) w = static_cast<int>(taps.size());
            BinaryPolynomial p2 = named("--p2", [&] { return parse_poly(atk_p2); });
            Bits window = named("--window", [&] { return bits_from_string(atk_window); });
            LinearizationReport rep = linearize_generator(atk_l1, p2, w);
            ReconstructionResult res =
                reconstruct(rep.final_pair, InterceptedWindow(window, atk_offset), rep.coset_poly,
                            atk_l1, atk_reverse);
            if (structured)
                out << result_json(res, 10000).dump(2) << "\n";
            else
                out << res.to_text();
        }
        return 0;
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ccsg::cli
