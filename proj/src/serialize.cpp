#include "rankforge/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rankforge {

json field_to_json(const FieldCtx* ctx) {
    json j;
    j["p"] = ctx->p();
    j["e"] = ctx->e();
    j["n"] = ctx->n();
    j["q_modulus"] = ctx->q_modulus();
    json ext = json::array();
    for (auto c : ctx->ext_modulus()) {
        json coeff = json::array();
        for (int t = 0; t < ctx->e(); ++t) {
            coeff.push_back(int(c % ctx->p()));
            c /= ctx->p();
        }
        ext.push_back(coeff);
    }
    j["ext_modulus"] = ext;
    j["alpha"] = ctx->coords(ctx->alpha());
    return j;
}

FieldSpec field_spec_from_json(const json& j) {
    FieldSpec fs;
    try {
        fs.p = j.at("p").get<int>();
        fs.e = j.at("e").get<int>();
        fs.n = j.at("n").get<int>();
        if (j.contains("q_modulus")) fs.q_modulus = j["q_modulus"].get<std::vector<int>>();
        if (j.contains("ext_modulus")) fs.ext_modulus = j["ext_modulus"].get<std::vector<std::vector<int>>>();
        if (j.contains("alpha")) fs.alpha = j["alpha"].get<std::vector<int>>();
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("bad field JSON: ") + ex.what());
    }
    return fs;
}

json poly_to_json(const LinearizedPoly& f) {
    const FieldCtx* ctx = f.ctx();
    json j = json::array();
    for (int i = 0; i < ctx->n(); ++i) j.push_back(ctx->coords(f.coeff(i)));
    return j;
}

LinearizedPoly poly_from_json(const FieldCtx* ctx, const json& j) {
    std::vector<std::uint32_t> coeffs;
    try {
        for (const auto& c : j) coeffs.push_back(ctx->from_coords(c.get<std::vector<int>>()));
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("bad polynomial JSON: ") + ex.what());
    }
    return LinearizedPoly(ctx, std::move(coeffs));
}

std::string poly_to_text(const LinearizedPoly& f) {
    const FieldCtx* ctx = f.ctx();
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = 0; i < ctx->n(); ++i) {
        if (!f.coeff(i)) continue;
        if (!out.empty()) out += " + ";
        out += ctx->to_string(f.coeff(i));
        if (i == 1) out += "*X^q";
        if (i > 1) out += "*X^q" + std::to_string(i);
    }
    return out;
}

LinearizedPoly poly_from_text(const FieldCtx* ctx, const std::string& s) {
    std::vector<std::uint32_t> coeffs(ctx->n(), 0);
    std::string str = s;
    // split on '+' (element syntax never contains '+')
    std::vector<std::string> terms;
    std::string cur;
    for (char ch : str) {
        if (ch == '+') {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    auto trim = [](std::string t) {
        t.erase(t.begin(), std::find_if(t.begin(), t.end(), [](char c) { return !std::isspace(c); }));
        t.erase(std::find_if(t.rbegin(), t.rend(), [](char c) { return !std::isspace(c); }).base(), t.end());
        return t;
    };
    for (auto& raw : terms) {
        std::string t = trim(raw);
        if (t.empty() || t == "0") continue;
        std::string coeff_part = t;
        int power = 0;
        auto xpos = std::string::npos;
        for (std::size_t i = 0; i < t.size(); ++i)
            if ((t[i] == 'X' || t[i] == 'x') && (i == 0 || t[i - 1] != '[')) {
                xpos = i;
                break;
            }
        if (xpos != std::string::npos) {
            std::string xpart = trim(t.substr(xpos));
            coeff_part = trim(t.substr(0, xpos));
            if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part = trim(coeff_part.substr(0, coeff_part.size() - 1));
            if (coeff_part.empty()) coeff_part = "1";
            if (xpart == "X" || xpart == "x") {
                power = 0;
            } else if (xpart.size() >= 3 && xpart[1] == '^' && (xpart[2] == 'q' || xpart[2] == 'Q')) {
                power = (xpart.size() == 3) ? 1 : 0;
                if (xpart.size() > 3) {
                    try {
                        power = std::stoi(xpart.substr(3));
                    } catch (...) {
                        throw Error(ErrorCode::ParseError, "bad q-power in '" + t + "'");
                    }
                }
            } else {
                throw Error(ErrorCode::ParseError, "bad monomial '" + t + "'");
            }
        }
        if (power < 0 || power >= ctx->n()) throw Error(ErrorCode::ParseError, "q-power out of range in '" + t + "'");
        std::uint32_t c = ctx->parse_element(coeff_part);
        coeffs[power] = ctx->add(coeffs[power], c);
    }
    return LinearizedPoly(ctx, std::move(coeffs));
}

json code_to_json(const RankMetricCode& code) {
    json j;
    j["field"] = field_to_json(code.ctx());
    j["linearity"] = code.linearity();
    int k_hint = -1;
    for (const auto& b : code.basis()) k_hint = std::max(k_hint, b.qdegree());
    j["k_hint"] = k_hint + 1;
    json basis = json::array();
    for (const auto& b : code.basis()) basis.push_back(poly_to_json(b));
    j["basis"] = basis;
    return j;
}

LoadedCode code_from_json(const json& j) {
    auto ctx = FieldCtx::make(field_spec_from_json(j.at("field")));
    auto code = code_from_json_with_ctx(ctx.get(), j);
    return LoadedCode{std::move(ctx), std::move(code)};
}

RankMetricCode code_from_json_with_ctx(const FieldCtx* ctx, const json& j) {
    int d0 = j.value("linearity", ctx->e());
    std::vector<LinearizedPoly> basis;
    try {
        for (const auto& b : j.at("basis")) basis.push_back(poly_from_json(ctx, b));
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("bad code JSON: ") + ex.what());
    }
    return RankMetricCode::make(ctx, d0, basis);
}

json matrix_to_json(const MatrixFq& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(int(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

MatrixFq matrix_from_json(const FieldCtx* ctx, const json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "matrix JSON must be a nonempty array");
    int rows = int(j.size()), cols = int(j[0].size());
    MatrixFq m(ctx, rows, cols);
    for (int r = 0; r < rows; ++r) {
        if ((int)j[r].size() != cols) throw Error(ErrorCode::ParseError, "ragged matrix JSON");
        for (int c = 0; c < cols; ++c) {
            int v = j[r][c].get<int>();
            if (v < 0 || std::uint32_t(v) >= ctx->q()) throw Error(ErrorCode::ParseError, "matrix entry out of F_q");
            m.at(r, c) = std::uint8_t(v);
        }
    }
    return m;
}

std::string matrix_to_text(const MatrixFq& m) {
    std::string out;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out += " ";
            out += std::to_string(int(m.at(r, c)));
        }
        out += "\n";
    }
    return out;
}

MatrixFq matrix_from_text(const FieldCtx* ctx, const std::string& text) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::uint8_t> row;
        std::istringstream ls(line);
        std::string tok;
        int col = 0;
        while (ls >> tok) {
            ++col;
            try {
                int v = std::stoi(tok);
                if (v < 0 || std::uint32_t(v) >= ctx->q()) throw std::out_of_range("entry");
                row.push_back(std::uint8_t(v));
            } catch (...) {
                throw Error(ErrorCode::ParseError, "bad matrix entry at line " + std::to_string(lineno) +
                                                       ", column " + std::to_string(col));
            }
        }
        if (!rows.empty() && row.size() != rows[0].size())
            throw Error(ErrorCode::ParseError, "ragged matrix at line " + std::to_string(lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix text");
    MatrixFq m(ctx, int(rows.size()), int(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

json distribution_to_json(const RankDistribution& d) {
    json j = json::object();
    for (auto& [r, c] : d.counts) j[std::to_string(r)] = c;
    return j;
}

namespace {

// split on commas that are not inside brackets
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::pair<std::string, std::string> split_kv(const std::string& s) {
    auto pos = s.find('=');
    if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value in '" + s + "'");
    return {s.substr(0, pos), s.substr(pos + 1)};
}

// polynomial shorthand over F_p: e.g. "y4-y-1", "x2+x+1" (variable letter free)
std::vector<int> parse_poly_shorthand(const std::string& s, int p) {
    std::vector<int> coeffs;
    auto bump = [&](int deg, int val) {
        if ((int)coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = ((coeffs[deg] + val) % p + p) % p;
    };
    std::size_t i = 0;
    int sign = 1;
    while (i < s.size()) {
        char ch = s[i];
        if (ch == '+') {
            sign = 1;
            ++i;
            continue;
        }
        if (ch == '-') {
            sign = -1;
            ++i;
            continue;
        }
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        int coef = 1;
        if (std::isdigit(ch)) {
            coef = 0;
            while (i < s.size() && std::isdigit(s[i])) coef = coef * 10 + (s[i++] - '0');
        }
        int deg = 0;
        if (i < s.size() && std::isalpha(s[i])) {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') ++i;
            if (i < s.size() && std::isdigit(s[i])) {
                deg = 0;
                while (i < s.size() && std::isdigit(s[i])) deg = deg * 10 + (s[i++] - '0');
            }
        }
        bump(deg, sign * coef);
        sign = 1;
    }
    return coeffs;
}

}  // namespace

FieldSpec parse_field_string(const std::string& s) {
    FieldSpec fs;
    std::string ext_raw, qmod_raw, alpha_raw;
    for (const auto& part : split_args(s)) {
        auto [k, v] = split_kv(part);
        if (k == "p")
            fs.p = std::stoi(v);
        else if (k == "e")
            fs.e = std::stoi(v);
        else if (k == "n")
            fs.n = std::stoi(v);
        else if (k == "ext")
            ext_raw = v;
        else if (k == "qmod")
            qmod_raw = v;
        else if (k == "alpha")
            alpha_raw = v;
        else if (k == "dlog_cap")
            fs.dlog_cap = std::stoull(v);
        else
            throw Error(ErrorCode::ParseError, "unknown field key '" + k + "'");
    }
    if (!qmod_raw.empty()) fs.q_modulus = parse_poly_shorthand(qmod_raw, fs.p);
    if (!ext_raw.empty()) {
        auto c = parse_poly_shorthand(ext_raw, fs.p);
        for (int v : c) {
            std::vector<int> coord(fs.e, 0);
            coord[0] = v;
            fs.ext_modulus.push_back(coord);
        }
    }
    if (!alpha_raw.empty()) {
        int en = fs.e * fs.n;
        if (alpha_raw == "y") {
            std::vector<int> c(en, 0);
            if (fs.e >= en) throw Error(ErrorCode::ParseError, "alpha=y needs n > 1");
            c[fs.e] = 1;
            fs.alpha = c;
        } else if (alpha_raw.front() == '[') {
            std::vector<int> c;
            for (auto& tok : split_args(alpha_raw.substr(1, alpha_raw.size() - 2))) c.push_back(std::stoi(tok));
            fs.alpha = c;
        } else {
            throw Error(ErrorCode::ParseError, "alpha must be 'y' or a coordinate list");
        }
    }
    return fs;
}

RankMetricCode parse_construction(const FieldCtx* ctx, const std::string& s) {
    if (s == "zero") return RankMetricCode::make(ctx, ctx->e(), {});
    if (s == "full") return gabidulin(ctx, ctx->n(), 1);
    auto open = s.find('[');
    if (open == std::string::npos || s.back() != ']')
        throw Error(ErrorCode::ParseError, "expected NAME[args] in construction '" + s + "'");
    std::string name = s.substr(0, open);
    std::string argstr = s.substr(open + 1, s.size() - open - 2);
    std::map<std::string, std::string> kv;
    for (const auto& part : split_args(argstr)) {
        auto [k, v] = split_kv(part);
        kv[k] = v;
    }
    auto geti = [&](const std::string& key, std::optional<int> dflt) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (dflt) return *dflt;
            throw Error(ErrorCode::ParseError, "construction needs " + key + "=...");
        }
        return std::stoi(it->second);
    };
    if (name == "G") {
        return gabidulin(ctx, geti("k", std::nullopt), geti("s", 1));
    }
    if (name == "H") {
        TwistSpec spec;
        spec.k = geti("k", std::nullopt);
        spec.s = geti("s", 1);
        spec.h = geti("h", 0);
        auto it = kv.find("eta");
        if (it == kv.end()) throw Error(ErrorCode::ParseError, "H[...] needs eta=...");
        spec.eta = ctx->parse_element(it->second);
        return twisted(ctx, spec);
    }
    if (name == "Hgen") {
        int k = geti("k", std::nullopt);
        auto it1 = kv.find("phi1"), it2 = kv.find("phi2");
        if (it1 == kv.end() || it2 == kv.end())
            throw Error(ErrorCode::ParseError, "Hgen[...] needs phi1=... and phi2=...");
        FunctionalPair pair{poly_from_text(ctx, it1->second), poly_from_text(ctx, it2->second)};
        return general_twisted(ctx, k, pair);
    }
    throw Error(ErrorCode::ParseError, "unknown construction '" + name + "'");
}

}  // namespace rankforge
