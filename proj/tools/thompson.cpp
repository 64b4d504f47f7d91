// thompson: command-line front end for the F_k library.
//
//   thompson nf --k 3 "y1 y0"
//   thompson member --k 3 --subgroup f3vec "y1^2"
//   thompson verify prop1 --max-splits 3
//   thompson gamma --k 3 "y0" --dot out.dot
//
// Exit codes: 0 pass, 1 fail with counterexample, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "thompson/suites.hpp"

using namespace thompson;

namespace {

struct Options {
    int k = 3;
    bool json = false;
    std::size_t max_splits = 3;
    std::size_t depth = 8;
    std::uint64_t seed = 20240607;
    std::size_t n = 6;
    std::string family = "y";
    std::string subgroup;
    std::string dot;
    std::string suite;
    std::vector<std::string> words;
};

Element element_of(const std::string& text, int k) {
    auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') return element_from_string(text).element;
    return eval_word(parse_word(text, k));
}

std::string nf_string(const Element& g) {
    auto w = normal_form(g);
    if (g.arity() == 2) w.alphabet = Alphabet::x;
    return to_string(w);
}

int print_element(const Element& g, const Options& o, bool unreduced = false) {
    Json e = element_to_json(g);
    if (o.json) {
        Json out = {{"element", e}, {"normal_form", nf_string(g)}};
        if (unreduced) out["warning"] = "input was unreduced";
        std::cout << out.dump() << "\n";
    } else {
        if (unreduced) std::cerr << "warning: input was unreduced\n";
        std::cout << e.dump() << "\n" << nf_string(g) << "\n";
    }
    return 0;
}

std::string read_input(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw Error("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_reduce(const Options& o) {
    auto parsed = element_from_string(read_input(o.words.at(0)));
    return print_element(parsed.element, o, parsed.was_unreduced);
}

int cmd_mul(const Options& o) {
    Element acc = element_of(o.words.at(0), o.k);
    for (std::size_t i = 1; i < o.words.size(); ++i) {
        Element next = element_of(o.words[i], o.k);
        if (next.arity() != acc.arity()) throw ArityMismatch(acc.arity(), next.arity());
        acc = multiply(acc, next);
    }
    return print_element(acc, o);
}

int cmd_inv(const Options& o) { return print_element(element_of(o.words.at(0), o.k).inverse(), o); }

int cmd_nf(const Options& o) {
    Element g = element_of(o.words.at(0), o.k);
    if (o.json) std::cout << Json{{"normal_form", nf_string(g)}, {"element", element_to_json(g)}}.dump() << "\n";
    else std::cout << nf_string(g) << "\n";
    return 0;
}

std::string colouring_string(const std::vector<Colour>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += colour_char(c[i]);
    }
    return s + ")";
}

std::string cycle_string(const std::vector<std::size_t>& cyc) {
    std::string s;
    for (std::size_t i = 0; i < cyc.size(); ++i) s += (i ? " " : "") + ("v" + std::to_string(cyc[i]));
    return s;
}

int cmd_member(const Options& o) {
    Element g = element_of(o.words.at(0), o.k);
    const std::string& tag = o.subgroup;
    bool member = false;
    Json witness = Json::object();
    if (tag == "f3vec" || tag == "f2vec") {
        int want = tag == "f3vec" ? 3 : 2;
        if (g.arity() != want) throw ArityMismatch(want, g.arity());
        member = is_oriented(g);
        auto gamma = gamma_of(g);
        if (member) witness["colouring"] = colouring_string(*two_colouring(gamma));
        else witness["odd_cycle"] = cycle_string(odd_cycle(gamma));
    } else if (tag == "gk") {
        member = in_Gk(g);
        witness["log_slope_at_1"] = log_slope_at_1(g);
    } else if (tag.rfind("kab:", 0) == 0) {
        auto spec = tag.substr(4);
        auto comma = spec.find(',');
        if (comma == std::string::npos) throw Error("kab needs a,b");
        long long a = std::stoll(spec.substr(0, comma)), b = std::stoll(spec.substr(comma + 1));
        member = in_K_ab(g, a, b);
        auto p = pi_ab(g);
        witness["pi"] = {p.at0, p.at1};
    } else if (tag.rfind("parabolic:", 0) == 0) {
        Rational x = parse_rational(tag.substr(10));
        member = in_parabolic(g, x);
        witness["image"] = format_rational(to_plmap(g)(x));
    } else if (tag == "zstab") {
        auto t = preserves_Z(g, o.depth);
        member = !t;
        if (t) witness["address"] = "." + t->digits;
    } else {
        throw CLI::ValidationError("--subgroup", "unsupported subgroup tag '" + tag + "'");
    }
    if (o.json) {
        std::cout << Json{{"subgroup", tag}, {"member", member}, {"witness", witness}}.dump() << "\n";
    } else {
        std::cout << (member ? "true" : "false") << "\n";
        for (const auto& [key, value] : witness.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return member ? 0 : 1;
}

int cmd_verify(const Options& o) {
    SuiteParams p;
    p.k = o.k;
    p.max_splits = o.max_splits;
    p.depth = o.depth;
    p.seed = o.seed;
    p.n = o.n;
    p.family = o.family;
    auto report = run_suite(o.suite, p);
    if (o.json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << o.suite << ": " << (report.pass ? "pass" : "fail") << " (" << report.checked << " checked, "
                  << report.runtime_seconds << " s)\n";
        for (const auto& [key, value] : report.notes.items()) std::cout << "  " << key << ": " << value.dump() << "\n";
        for (const auto& c : report.counterexamples) std::cout << "  counterexample: " << c.dump() << "\n";
    }
    return report.pass ? 0 : 1;
}

int cmd_gamma(const Options& o) {
    Element g = element_of(o.words.at(0), o.k);
    auto gamma = gamma_of(g);
    std::string dot = to_dot(gamma, nf_string(g));
    if (!o.dot.empty()) {
        std::ofstream out(o.dot);
        if (!out) throw Error("cannot write " + o.dot);
        out << dot;
    }
    if (o.json) {
        Json edges = Json::array();
        for (const auto& e : gamma.edges) edges.push_back({e.u, e.v, e.side == Side::top ? "top" : "bottom"});
        std::cout << Json{{"vertices", gamma.vertex_count}, {"edges", edges}}.dump() << "\n";
    } else if (o.dot.empty()) {
        std::cout << dot;
    } else {
        std::cout << gamma.vertex_count << " vertices, " << gamma.edges.size() << " edges\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thompson group F and Brown-Thompson F_k toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--k", o.k, "arity of y-words")->check(CLI::Range(2, kMaxArity))->capture_default_str();
    app.add_flag("--json", o.json, "machine-readable output");

    auto words = [&](CLI::App* sub, const std::string& what, bool many = false) {
        auto* opt = sub->add_option("words", o.words, what)->required();
        if (!many) opt->expected(1);
    };
    auto* reduce = app.add_subcommand("reduce", "reduce an element given as JSON (or @file)");
    words(reduce, "element JSON");
    auto* mul = app.add_subcommand("mul", "product, left factor acts first");
    words(mul, "words or element JSON", true);
    auto* inv = app.add_subcommand("inv", "inverse");
    words(inv, "word or element JSON");
    auto* nf = app.add_subcommand("nf", "normal form");
    words(nf, "word or element JSON");
    auto* member = app.add_subcommand("member", "subgroup membership");
    member->add_option("--subgroup", o.subgroup, "gk, kab:a,b, parabolic:p/q, f3vec, f2vec, zstab")->required();
    member->add_option("--depth", o.depth, "search depth for zstab")->capture_default_str();
    words(member, "word or element JSON");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(names));
    verify->add_option("--max-splits", o.max_splits)->capture_default_str();
    verify->add_option("--depth", o.depth)->capture_default_str();
    verify->add_option("--seed", o.seed)->capture_default_str();
    verify->add_option("--n", o.n, "largest relation index")->capture_default_str();
    verify->add_option("--family", o.family, "y, w, u, v, wo, phi")->capture_default_str();
    auto* gamma = app.add_subcommand("gamma", "Γ-graph, as DOT");
    words(gamma, "word or element JSON");
    gamma->add_option("--dot", o.dot, "write DOT to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*reduce) return cmd_reduce(o);
        if (*mul) return cmd_mul(o);
        if (*inv) return cmd_inv(o);
        if (*nf) return cmd_nf(o);
        if (*member) return cmd_member(o);
        if (*verify) return cmd_verify(o);
        if (*gamma) return cmd_gamma(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
