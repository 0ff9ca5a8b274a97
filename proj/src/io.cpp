#include "htp/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace htp {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& body, const char* what) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t i = cur[0] == '-' ? 1 : 0;
        if (i == cur.size()) throw ParseError(std::string("bad ") + what + ": '" + cur + "'");
        for (; i < cur.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(cur[i])))
                throw ParseError(std::string("bad ") + what + ": '" + cur + "'");
        out.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : body) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

struct KeyParts {
    std::vector<std::vector<int>> cycles;
    std::vector<int> word;
    bool has_word = false;
};

KeyParts scan_key(const std::string& text) {
    KeyParts out;
    std::string s = trim(text);
    std::size_t i = 0;
    if (s.empty() || s[0] != '(') throw ParseError("key must start with a cycle: '" + text + "'");
    while (i < s.size() && s[i] == '(') {
        std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw ParseError("unclosed cycle in '" + text + "'");
        out.cycles.push_back(parse_int_list(s.substr(i + 1, close - i - 1), "cycle symbol"));
        i = close + 1;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    if (i < s.size()) {
        if (s[i] != '[') throw ParseError("unexpected '" + s.substr(i) + "' after cycles");
        std::size_t close = s.find(']', i);
        if (close == std::string::npos) throw ParseError("unclosed word in '" + text + "'");
        out.word = parse_int_list(s.substr(i + 1, close - i - 1), "word letter");
        out.has_word = true;
        if (trim(s.substr(close + 1)) != "")
            throw ParseError("unexpected trailing '" + s.substr(close + 1) + "'");
    }
    return out;
}

Perm perm_from_parts(const std::vector<std::vector<int>>& cycles, int degree) {
    std::set<int> seen;
    int max_sym = 0;
    for (const auto& cyc : cycles)
        for (int v : cyc) {
            if (v < 0) throw ParseError("negative cycle symbol");
            if (!seen.insert(v).second)
                throw ParseError("symbol " + std::to_string(v) + " repeated across cycles");
            max_sym = std::max(max_sym, v);
        }
    if (degree < 0) degree = max_sym;
    if (max_sym > degree)
        throw ParseError("cycle symbol " + std::to_string(max_sym) + " exceeds degree " +
                         std::to_string(degree));
    std::vector<int> images(degree + 1);
    for (int v = 0; v <= degree; ++v) images[v] = v;
    for (const auto& cyc : cycles)
        for (std::size_t k = 0; k < cyc.size(); ++k)
            images[cyc[k]] = cyc[(k + 1) % cyc.size()];
    return Perm(images);
}

// Split on top-level '+'/'-' outside () and []; a sign at the start of a term
// or right after '^' binds to the number.
struct SignedChunk {
    bool neg;
    std::string body;
};

std::vector<SignedChunk> split_terms(const std::string& text) {
    std::vector<SignedChunk> out;
    std::string cur;
    bool neg = false;
    bool at_start = true;
    int depth = 0;
    char prev = 0;
    auto flush = [&](bool next_neg) {
        if (trim(cur).empty()) throw ParseError("empty term in '" + text + "'");
        out.push_back({neg, trim(cur)});
        cur.clear();
        neg = next_neg;
        at_start = true;
        prev = 0;
    };
    for (char ch : text) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (depth == 0 && (ch == '+' || ch == '-') && prev != '^') {
            if (at_start) {
                if (ch == '-') neg = !neg;
            } else {
                flush(ch == '-');
            }
            continue;
        }
        cur.push_back(ch);
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            prev = ch;
            at_start = false;
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + text + "'");
    if (trim(cur).empty()) throw ParseError("dangling sign in '" + text + "'");
    out.push_back({neg, trim(cur)});
    return out;
}

Laurent parse_coeff_text(const std::string& raw) {
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        // Strip parens only if they wrap the whole string.
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0 && i + 1 < s.size()) {
                wraps = false;
                break;
            }
        }
        if (wraps) s = trim(s.substr(1, s.size() - 2));
    }
    try {
        return parse_laurent(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string coeff_magnitude_string(int exp, const Rational& mag) {
    return Laurent::monomial(exp, mag).to_string();
}

}  // namespace

Perm parse_perm_cycles(const std::string& text) {
    KeyParts parts = scan_key(text);
    if (parts.has_word) throw ParseError("unexpected word in permutation '" + text + "'");
    return perm_from_parts(parts.cycles, -1);
}

TraceKey parse_trace_key(const std::string& text) {
    KeyParts parts = scan_key(text);
    int degree = parts.has_word ? static_cast<int>(parts.word.size()) : 0;
    for (int letter : parts.word)
        if (letter < 1) throw ParseError("word letters start at 1");
    return TraceKey{perm_from_parts(parts.cycles, degree), parts.word};
}

TraceElement parse_trace_element(const std::string& text, Basis basis, int min_dim) {
    struct RawTerm {
        Laurent coeff;
        TraceKey key;
    };
    std::vector<RawTerm> raw;
    int dim = min_dim;
    for (const SignedChunk& chunk : split_terms(text)) {
        // Last top-level '*' separates coefficient from key.
        std::size_t star = std::string::npos;
        int depth = 0;
        for (std::size_t i = 0; i < chunk.body.size(); ++i) {
            char ch = chunk.body[i];
            if (ch == '(' || ch == '[') ++depth;
            if (ch == ')' || ch == ']') --depth;
            if (depth == 0 && ch == '*') star = i;
        }
        Laurent coeff;
        TraceKey key{Perm(0), {}};
        if (star != std::string::npos) {
            coeff = parse_coeff_text(chunk.body.substr(0, star));
            key = parse_trace_key(chunk.body.substr(star + 1));
        } else {
            try {
                key = parse_trace_key(chunk.body);
                coeff = Laurent::one();
            } catch (const ParseError&) {
                coeff = parse_coeff_text(chunk.body);
                key = TraceKey{Perm(0), {}};
            }
        }
        if (chunk.neg) coeff = -coeff;
        for (int letter : key.word) dim = std::max(dim, letter);
        raw.push_back({std::move(coeff), std::move(key)});
    }
    TraceElement out(basis, dim);
    for (const RawTerm& t : raw) out.add_term(t.key, t.coeff);
    return out;
}

std::string format_perm(const Perm& p) {
    // The 0-cycle always prints (it marks the key); other fixed points are
    // implied by the word length.
    std::ostringstream out;
    for (const auto& cyc : p.cycles()) {
        if (cyc[0] != 0 && cyc.size() == 1) continue;
        out << '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out << ' ';
            out << cyc[i];
        }
        out << ')';
    }
    return out.str();
}

std::string format_trace_key(const TraceKey& key) {
    std::ostringstream out;
    out << format_perm(key.perm);
    if (key.degree() > 0) {
        out << '[';
        for (std::size_t i = 0; i < key.word.size(); ++i) {
            if (i) out << ',';
            out << key.word[i];
        }
        out << ']';
    }
    return out.str();
}

std::string format_trace_element(const TraceElement& x) {
    if (x.is_zero()) return "0";
    std::vector<std::pair<TraceKey, Laurent>> terms(x.terms().begin(), x.terms().end());
    // highest degree first, mirroring Laurent::to_string
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
        return a.first < b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        std::string body;
        bool neg = false;
        if (coeff.is_monomial()) {
            int e = coeff.min_exponent();
            Rational c = coeff.coefficient(e);
            neg = c < 0;
            std::string mag = coeff_magnitude_string(e, neg ? -c : c);
            if (mag == "1" && key.degree() > 0)
                body = format_trace_key(key);
            else
                body = mag + "*" + format_trace_key(key);
        } else {
            body = "(" + coeff.to_string() + ")*" + format_trace_key(key);
        }
        if (first)
            out << (neg ? "-" : "") << body;
        else
            out << (neg ? " - " : " + ") << body;
        first = false;
    }
    return out.str();
}

std::string perm_to_json(const Perm& p) {
    nlohmann::json j;
    j["n"] = p.degree();
    j["images"] = p.images();
    return j.dump();
}

std::string laurent_to_json(const Laurent& c) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [e, r] : c.terms()) t[std::to_string(e)] = to_string(r);
    nlohmann::json j;
    j["terms"] = t;
    return j.dump();
}

std::string trace_element_to_json(const TraceElement& x) {
    nlohmann::json j;
    std::string tag = x.basis() == Basis::T ? "T" : "I";
    if (x.symmetrized()) tag += "_sym";
    j["basis"] = tag;
    j["dim"] = x.dim();
    nlohmann::json terms = nlohmann::json::array();
    std::vector<std::pair<TraceKey, Laurent>> sorted(x.terms().begin(), x.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first < b.first;
    });
    for (const auto& [key, coeff] : sorted) {
        nlohmann::json t;
        t["perm"] = nlohmann::json::parse(perm_to_json(key.perm));
        t["word"] = key.word;
        t["coeff"] = nlohmann::json::parse(laurent_to_json(coeff));
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump();
}

TraceElement trace_element_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    try {
        std::string basis = j.at("basis").get<std::string>();
        if (basis != "T" && basis != "I" && basis != "T_sym" && basis != "I_sym")
            throw ParseError("unknown basis tag '" + basis + "'");
        TraceElement out(basis[0] == 'T' ? Basis::T : Basis::I, j.at("dim").get<int>());
        for (const auto& t : j.at("terms")) {
            std::vector<int> images = t.at("perm").at("images").get<std::vector<int>>();
            Word word = t.at("word").get<Word>();
            Laurent coeff;
            for (const auto& [e, r] : t.at("coeff").at("terms").items())
                coeff += Laurent::monomial(std::stoi(e), parse_rational(r.get<std::string>()));
            out.add_term(TraceKey{Perm(images), word}, coeff);
        }
        if (basis.size() > 1) out.set_symmetrized(true);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace htp
