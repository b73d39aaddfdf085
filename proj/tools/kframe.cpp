// kframe: verification suites and object evaluation on the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <kframe/kframe.hpp>

namespace
{

using namespace kframe;

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(item.substr(b, e - b + 1));
        }
    }
    return out;
}

int run_verify(const SuiteConfig &config, const std::string &json_path)
{
    SuiteReport rep = run_suite(config);
    std::string text = rep.to_json().dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            throw ConfigError("cannot write '" + json_path + "'");
        }
        out << text;
        std::map<std::string, std::pair<int, int>> tally;
        for (const auto &r : rep.results) {
            auto &t = tally[r.identity];
            t.first += r.pass;
            t.second += 1;
        }
        for (const auto &id : rep.config.identities) {
            const auto &t = tally[id];
            std::cout << id << ": " << t.first << "/" << t.second << (t.first == t.second ? " ok" : " FAILED") << "\n";
        }
        for (const auto &r : rep.results) {
            if (r.identity == "certificate" && r.index == 0) {
                std::cout << "certificate: pants system for q = d "
                          << (r.lhs["feasible"].get<bool>() ? "feasible" : "infeasible") << ", discrepancy "
                          << r.lhs["discrepancy"].get<std::string>() << " = chi(pants)\n";
            }
        }
    }
    return rep.ok() ? 0 : 1;
}

struct EvalArgs {
    std::string kind;
    std::string ring = "Z";
    std::optional<int> g;
    std::optional<int> n;
    int truncation = 3;
    std::string word;
    bool has_word = false;
    std::string theta;
    std::string form;
    std::string phi;
};

bool looks_like_file(const std::string &s)
{
    return s.find(".json") != std::string::npos || std::filesystem::is_regular_file(s);
}

/// Surface implied by a mapping class expression: twist_*:i needs g >= i, slide:i needs g >= i + 1.
SigHint scan_phi(const std::string &expr)
{
    SigHint h;
    std::size_t p = 0;
    while ((p = expr.find(':', p)) != std::string::npos) {
        std::size_t q = p + 1;
        int k = 0;
        while (q < expr.size() && std::isdigit(static_cast<unsigned char>(expr[q])) && k < 100000) {
            k = 10 * k + (expr[q] - '0');
            ++q;
        }
        bool slide = p >= 5 && expr.compare(p - 5, 5, "slide") == 0;
        h.g = std::max(h.g, slide ? k + 1 : k);
        p = q;
    }
    return h;
}

int run_eval(const EvalArgs &a)
{
    RingSpec ring = ring_from_string(a.ring);

    std::optional<Expansion> theta;
    std::optional<QuadraticForm> form;
    std::optional<Json> phi_json;
    SigHint hint;
    if (a.has_word) {
        hint.merge(scan_generators(a.word));
    }
    if (!a.phi.empty()) {
        if (looks_like_file(a.phi)) {
            phi_json = parse_json(read_file(a.phi));
            SurfaceSig ps = mapping_class_from_json(*phi_json).sig();
            hint.merge(SigHint{ps.g, ps.n});
        } else {
            hint.merge(scan_phi(a.phi));
        }
    }
    if (!a.theta.empty() && a.theta != "default") {
        theta = expansion_from_json(parse_json(read_file(a.theta)));
    }
    if (!a.form.empty() && a.form != "d" && a.form != "default-theta") {
        form = qform_from_json(parse_json(read_file(a.form)));
    }

    SurfaceSig sig{a.g.value_or(hint.g), a.n.value_or(hint.n)};
    if (theta) {
        if (a.g || a.n) {
            if (!(theta->sig() == sig)) {
                throw SignatureMismatch("expansion file is over " + theta->sig().to_string() + ", requested "
                                        + sig.to_string());
            }
        }
        sig = theta->sig();
        ring = theta->space().ring;
    } else if (form) {
        if ((a.g || a.n) && !(form->sig() == sig)) {
            throw SignatureMismatch("form file is over " + form->sig().to_string() + ", requested " + sig.to_string());
        }
        sig = form->sig();
        ring = form->ring();
    }
    if (sig.g < hint.g || sig.n < hint.n) {
        throw SignatureMismatch("inputs mention generators outside " + sig.to_string());
    }

    auto need_theta = [&]() -> Expansion {
        if (a.theta.empty()) {
            throw ConfigError("eval " + a.kind + " needs --theta");
        }
        if (!theta) {
            theta = make_default_w3s(sig, ring, a.truncation);
        }
        return *theta;
    };
    auto need_form = [&]() -> QuadraticForm {
        if (a.form.empty()) {
            throw ConfigError("eval " + a.kind + " needs --form");
        }
        if (form) {
            return *form;
        }
        if (a.form == "d") {
            return morita_d(sig, ring);
        }
        return from_expansion(make_default_w3s(sig, ring, a.truncation));
    };
    auto need_word = [&]() {
        if (!a.has_word) {
            throw ConfigError("eval " + a.kind + " needs --word");
        }
        return parse_word(sig, a.word);
    };
    auto need_phi = [&]() {
        if (a.phi.empty()) {
            throw ConfigError("eval " + a.kind + " needs --phi");
        }
        if (phi_json) {
            MappingClass m = mapping_class_from_json(*phi_json, SigHint{sig.g, sig.n});
            if (!(m.sig() == sig)) {
                throw SignatureMismatch("mapping class file is over " + m.sig().to_string());
            }
            return m;
        }
        return parse_phi(sig, a.phi);
    };

    Json out;
    if (a.kind == "word") {
        out = need_word().to_string();
    } else if (a.kind == "expansion") {
        Expansion t = need_theta();
        out = eval(t, need_word()).to_string();
    } else if (a.kind == "qform") {
        QuadraticForm q = need_form();
        out = qf_eval(q, need_word()).to_string();
    } else if (a.kind == "tau") {
        Expansion t = need_theta();
        out = tau1(t, need_phi()).to_string();
    } else if (a.kind == "k") {
        QuadraticForm q = need_form();
        out = k_cocycle(q, need_phi()).to_string();
    } else {
        throw ConfigError("unknown eval kind '" + a.kind + "'");
    }
    std::cout << out.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact K-quadratic forms, K-expansions and mapping class group cocycles"};
    app.require_subcommand(1);

    SuiteConfig config;
    std::string ring_text = "Q";
    std::string identities;
    std::string json_path;
    auto *verify = app.add_subcommand("verify", "Run identity checks on seeded random inputs");
    verify->add_option("--ring", ring_text, "Z, Q or Z/<m>");
    verify->add_option("--g", config.g, "Genus");
    verify->add_option("--n", config.n, "Extra boundary components");
    verify->add_option("--seed", config.seed, "Seed");
    verify->add_option("--cases", config.cases, "Cases per identity");
    verify->add_option("--identities", identities, "Comma-separated identity names");
    verify->add_option("--json", json_path, "Write the report here instead of stdout");

    EvalArgs ea;
    int g_opt = -1, n_opt = -1;
    auto *ev = app.add_subcommand("eval", "Evaluate a word, expansion, form, tau or k");
    ev->add_option("kind", ea.kind, "word | expansion | qform | tau | k")->required();
    ev->add_option("--ring", ea.ring, "Z, Q or Z/<m> (ignored when a file fixes the ring)");
    ev->add_option("--g", g_opt, "Genus (inferred from the inputs when absent)");
    ev->add_option("--n", n_opt, "Extra boundary components");
    ev->add_option("--N", ea.truncation, "Truncation degree of the default expansion");
    auto *word_opt = ev->add_option("--word", ea.word, "Word, e.g. \"a1 b1 a1'\"");
    ev->add_option("--theta", ea.theta, "Expansion JSON file, or 'default'");
    ev->add_option("--form", ea.form, "Form JSON file, 'd' or 'default-theta'");
    ev->add_option("--phi", ea.phi, "Expression like 'twist_a:1 * twist_b:2^-1', or a JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            config.ring = ring_from_string(ring_text);
            config.identities = split_list(identities);
            return run_verify(config, json_path);
        }
        ea.has_word = word_opt->count() > 0;
        if (g_opt >= 0) {
            ea.g = g_opt;
        }
        if (n_opt >= 0) {
            ea.n = n_opt;
        }
        return run_eval(ea);
    } catch (const kframe::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
