#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "htp/char_theory.hpp"
#include "htp/fock.hpp"
#include "htp/group_algebra.hpp"
#include "htp/gue.hpp"
#include "htp/io.hpp"
#include "htp/trace_algebra.hpp"
#include "htp/verify.hpp"

namespace {

using htp::Basis;
using htp::Laurent;
using htp::Perm;
using htp::Rational;
using htp::RatVec;
using htp::TraceElement;

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Rational> parse_q(const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    try {
        return htp::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw htp::ParseError(std::string("--q: ") + e.what());
    }
}

void check_cap(const TraceElement& x, int max_degree) {
    if (x.max_degree() > max_degree)
        throw CapError("degree " + std::to_string(x.max_degree()) + " exceeds cap " +
                       std::to_string(max_degree) + " (raise with --max-degree)");
}

TraceElement parse_capped(const std::string& text, Basis basis, int max_degree) {
    TraceElement x = htp::parse_trace_element(text, basis);
    check_cap(x, max_degree);
    return x;
}

Basis parse_basis(const std::string& text) {
    if (text == "I") return Basis::I;
    if (text == "T") return Basis::T;
    throw htp::ParseError("--basis must be I or T");
}

// Evaluate every coefficient at q0 (kept as degree-0 Laurents for printing).
TraceElement at_q(const TraceElement& x, const Rational& q0) {
    TraceElement out(x.basis(), x.dim());
    for (const auto& [key, c] : x.terms()) out.add_term(key, Laurent::of(c.eval(q0)));
    return out;
}

std::string scalar_str(const Laurent& v, const std::optional<Rational>& q0) {
    if (!q0) return v.to_string();
    return htp::to_string(v.eval(*q0));
}

std::vector<RatVec> parse_vecs(const std::string& text, int dim_flag) {
    // Comma-separated list; each entry "e<k>" or "[r;r;...]".
    std::vector<std::vector<Rational>> raw;
    std::vector<int> eidx;
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        if (cur.empty()) throw htp::ParseError("--vecs: empty entry");
        if (cur[0] == 'e') {
            int k = std::atoi(cur.c_str() + 1);
            if (k < 1) throw htp::ParseError("--vecs: bad basis vector '" + cur + "'");
            eidx.push_back(k);
            raw.push_back({});
        } else if (cur.front() == '[' && cur.back() == ']') {
            std::vector<Rational> v;
            std::string part;
            for (char c : cur.substr(1, cur.size() - 2)) {
                if (c == ';') {
                    v.push_back(htp::parse_rational(part));
                    part.clear();
                } else {
                    part.push_back(c);
                }
            }
            if (!part.empty()) v.push_back(htp::parse_rational(part));
            if (v.empty()) throw htp::ParseError("--vecs: empty vector");
            eidx.push_back(0);
            raw.push_back(std::move(v));
        } else {
            throw htp::ParseError("--vecs: entry '" + cur + "' (want e<k> or [r;r])");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    flush();
    int dim = dim_flag;
    for (std::size_t i = 0; i < raw.size(); ++i)
        dim = std::max(dim, eidx[i] > 0 ? eidx[i] : static_cast<int>(raw[i].size()));
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        RatVec v(dim, Rational(0));
        if (eidx[i] > 0) {
            v[eidx[i] - 1] = 1;
        } else {
            for (std::size_t j = 0; j < raw[i].size(); ++j) v[j] = raw[i][j];
        }
        out.push_back(std::move(v));
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact trace-polynomial calculator for permutation-indexed Wick calculus"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the shared flags after the subcommand name

    std::string q_text = "symbolic";
    int max_degree = 6;
    int dim = 1;
    int big_n = 2;
    long samples = 100000;
    std::uint64_t seed = 1;
    std::string format = "text";
    app.add_option("--q", q_text, "q value: 'symbolic' or a rational like 1/2")->capture_default_str();
    app.add_option("--max-degree", max_degree, "symbolic degree cap")->capture_default_str();
    app.add_option("--dim", dim, "minimum vector-space dimension")->capture_default_str();
    app.add_option("--N", big_n, "matrix size for oracle subcommands")->capture_default_str();
    app.add_option("--samples", samples, "Monte Carlo sample count")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--format", format, "output format: text, json or tsv")->capture_default_str();

    auto* cmd_expand = app.add_subcommand("expand", "rewrite between the monomial and centered bases");
    std::string expand_to = "I";
    std::string expand_input;
    cmd_expand->add_option("--to", expand_to, "I: read keys as centered labels, show monomials; T: the inverse");
    cmd_expand->add_option("element", expand_input)->required();

    auto* cmd_mul = app.add_subcommand("mul", "product of two elements");
    std::string mul_basis = "I", mul_x, mul_y;
    cmd_mul->add_option("--basis", mul_basis, "input/output basis tag");
    cmd_mul->add_option("x", mul_x)->required();
    cmd_mul->add_option("y", mul_y)->required();

    auto* cmd_state = app.add_subcommand("state", "trace state of an element");
    std::string state_basis = "T", state_input;
    cmd_state->add_option("--basis", state_basis, "input basis tag");
    cmd_state->add_option("element", state_input)->required();

    auto* cmd_inner = app.add_subcommand("inner", "q-inner product of two elements");
    std::string inner_basis = "I", inner_x, inner_y;
    cmd_inner->add_option("--basis", inner_basis, "input basis tag");
    cmd_inner->add_option("x", inner_x)->required();
    cmd_inner->add_option("y", inner_y)->required();

    auto* cmd_chartable = app.add_subcommand("chartable", "character table of the marked symmetric group");
    int ct_n = 2;
    cmd_chartable->add_option("--n", ct_n, "degree")->required();

    auto* cmd_gram = app.add_subcommand("gram", "Gram matrix of the q-character form");
    int gram_n = 2;
    cmd_gram->add_option("--n", gram_n, "degree")->required();

    auto* cmd_kernel = app.add_subcommand("kernel", "Gram radical generators at q = ±1/N");
    int ker_n = 2;
    std::string ker_sign = "alternating";
    cmd_kernel->add_option("--n", ker_n, "degree")->required();
    cmd_kernel->add_option("--sign", ker_sign, "alternating (q=1/N) or plain (q=-1/N)");

    auto* cmd_wick = app.add_subcommand("wick", "pairing-sum moment of a trace monomial");
    std::string wick_perm, wick_vecs;
    cmd_wick->add_option("--perm", wick_perm)->required();
    cmd_wick->add_option("--vecs", wick_vecs)->required();

    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo check of a trace-monomial moment");
    std::string mc_perm, mc_vecs;
    cmd_mc->add_option("--perm", mc_perm)->required();
    cmd_mc->add_option("--vecs", mc_vecs)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a property suite");
    std::string suite = "all";
    cmd_verify->add_option("--suite", suite, "perm, algebra, characters, fock, oracle, mc or all");

    CLI11_PARSE(app, argc, argv);
    std::optional<Rational> q0 = parse_q(q_text);

    if (*cmd_expand) {
        TraceElement x = parse_capped(expand_input, Basis::T, max_degree);
        htp::HermiteDirection dir;
        if (expand_to == "I")
            dir = htp::HermiteDirection::ToI;
        else if (expand_to == "T")
            dir = htp::HermiteDirection::ToT;
        else
            throw htp::ParseError("--to must be I or T");
        TraceElement y = htp::hermite_transform(dir, x);
        if (q0) y = at_q(y, *q0);
        std::cout << (format == "json" ? htp::trace_element_to_json(y)
                                       : htp::format_trace_element(y))
                  << "\n";
        return 0;
    }
    if (*cmd_mul) {
        Basis b = parse_basis(mul_basis);
        TraceElement x = parse_capped(mul_x, b, max_degree);
        TraceElement y = parse_capped(mul_y, b, max_degree);
        if (x.max_degree() + y.max_degree() > max_degree)
            throw CapError("product degree exceeds cap");
        TraceElement z = htp::multiply(convert(x, Basis::I), convert(y, Basis::I));
        z = convert(z, b);
        if (q0) z = at_q(z, *q0);
        std::cout << (format == "json" ? htp::trace_element_to_json(z)
                                       : htp::format_trace_element(z))
                  << "\n";
        return 0;
    }
    if (*cmd_state) {
        TraceElement x = parse_capped(state_input, parse_basis(state_basis), max_degree);
        std::cout << scalar_str(htp::state_phi(x), q0) << "\n";
        return 0;
    }
    if (*cmd_inner) {
        Basis b = parse_basis(inner_basis);
        TraceElement x = parse_capped(inner_x, b, max_degree);
        TraceElement y = parse_capped(inner_y, b, max_degree);
        std::cout << scalar_str(htp::inner_product_q(x, y), q0) << "\n";
        return 0;
    }
    if (*cmd_chartable) {
        htp::CharTable t(ct_n);
        if (format == "json") {
            nlohmann::json j;
            j["n"] = t.n();
            for (const auto& l : t.lambdas()) j["lambdas"].push_back(l.to_string());
            for (const auto& c : t.classes()) j["classes"].push_back(c.to_string());
            for (std::size_t a = 0; a < t.lambdas().size(); ++a) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t c = 0; c < t.classes().size(); ++c)
                    row.push_back(t.value(static_cast<int>(a), static_cast<int>(c)).get_str());
                j["values"].push_back(row);
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << t.to_tsv();
        }
        return 0;
    }
    if (*cmd_gram) {
        if (gram_n > 4) throw CapError("gram degree capped at 4");
        if (!q0) throw htp::ParseError("gram needs a numeric --q");
        htp::ExactMatrix gram = htp::chi_q_gram(gram_n, *q0);
        auto rp = gram.sym_rank_psd();
        if (format == "json") {
            nlohmann::json j;
            j["n"] = gram_n;
            j["q"] = htp::to_string(*q0);
            j["rank"] = rp.rank;
            j["psd"] = rp.psd;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "# rank " << rp.rank << (rp.psd ? " psd" : " not-psd") << "\n";
            if (format == "tsv") std::cout << gram.to_tsv();
        }
        return 0;
    }
    if (*cmd_kernel) {
        if (ker_n > 4) throw CapError("kernel degree capped at 4");
        htp::KernelSign sign;
        if (ker_sign == "alternating")
            sign = htp::KernelSign::Alternating;
        else if (ker_sign == "plain")
            sign = htp::KernelSign::Plain;
        else
            throw htp::ParseError("--sign must be alternating or plain");
        Rational q = Rational(1, big_n);
        if (sign == htp::KernelSign::Plain) q = -q;
        htp::ExactMatrix gram = htp::chi_q_gram(ker_n, q);
        auto perms = htp::all_perms(ker_n);
        std::vector<std::vector<Rational>> span;
        int count = 0;
        for (const htp::PartialPerm& p : htp::all_partial_perms(ker_n)) {
            if (p.linear_orbit_count() != big_n + 1) continue;
            htp::GAElement gen = htp::kernel_generator(p, sign);
            ++count;
            std::vector<Rational> coords(perms.size(), Rational(0));
            for (std::size_t i = 0; i < perms.size(); ++i) {
                Laurent c = gen.coefficient(perms[i]);
                if (!c.is_zero()) coords[i] = c.coefficient(0);
            }
            span.push_back(std::move(coords));
        }
        int span_rank = 0;
        if (!span.empty()) {
            htp::ExactMatrix m(static_cast<int>(span.size()), static_cast<int>(perms.size()));
            for (std::size_t r = 0; r < span.size(); ++r)
                for (std::size_t c = 0; c < perms.size(); ++c)
                    m.at(static_cast<int>(r), static_cast<int>(c)) = span[r][c];
            span_rank = m.rank();
        }
        int nullity = static_cast<int>(perms.size()) - gram.rank();
        nlohmann::json j;
        j["n"] = ker_n;
        j["N"] = big_n;
        j["q"] = htp::to_string(q);
        j["generators"] = count;
        j["span_rank"] = span_rank;
        j["gram_nullity"] = nullity;
        j["match"] = span_rank == nullity;
        if (format == "json") {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "generators " << count << ", span rank " << span_rank
                      << ", gram nullity " << nullity << (span_rank == nullity ? " (match)" : " (MISMATCH)")
                      << "\n";
        }
        return 0;
    }
    if (*cmd_wick) {
        Perm alpha = htp::parse_perm_cycles(wick_perm);
        auto vecs = parse_vecs(wick_vecs, dim);
        if (static_cast<int>(vecs.size()) != alpha.degree())
            throw htp::ParseError("wick: need one vector per slot");
        std::cout << htp::to_string(htp::wick_moment(alpha, vecs, big_n)) << "\n";
        return 0;
    }
    if (*cmd_mc) {
        Perm alpha = htp::parse_perm_cycles(mc_perm);
        auto vecs = parse_vecs(mc_vecs, dim);
        if (static_cast<int>(vecs.size()) != alpha.degree())
            throw htp::ParseError("mc: need one vector per slot");
        Rational oracle = htp::wick_moment(alpha, vecs, big_n);
        htp::McResult r = htp::mc_check(alpha, vecs, big_n, samples, seed);
        double dev = std::abs(r.estimate - oracle.get_d());
        double sig = r.stderr_real > 0 ? dev / r.stderr_real : (dev == 0 ? 0.0 : 1e18);
        nlohmann::json j;
        j["estimate"] = r.estimate;
        j["stderr"] = r.stderr_real;
        j["oracle"] = oracle.get_d();
        j["sigmas"] = sig;
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (*cmd_verify) {
        htp::VerifyOptions opts;
        opts.max_degree = std::min(max_degree, 6);
        opts.big_n = big_n;
        opts.samples = samples;
        opts.seed = seed;
        auto checks = htp::verify_suite(suite, opts);
        bool all_pass = true;
        if (format == "json") {
            nlohmann::json j;
            j["suite"] = suite;
            j["checks"] = nlohmann::json::array();
            for (const auto& c : checks) {
                all_pass = all_pass && c.pass;
                j["checks"].push_back({{"name", c.name},
                                       {"status", c.pass ? "pass" : "fail"},
                                       {"detail", c.detail}});
            }
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& c : checks) {
                all_pass = all_pass && c.pass;
                std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
                if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
                std::cout << "\n";
            }
        }
        return all_pass ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const htp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "math domain error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
}
