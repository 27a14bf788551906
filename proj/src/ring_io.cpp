#include "bettilab/ring_io.hpp"

#include <cctype>
#include <map>

namespace bettilab {

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take()
    {
        Token t = tok_;
        advance();
        return t;
    }
    void expect_punct(const std::string& p)
    {
        if (tok_.kind != Token::Punct || tok_.text != p)
            throw ParseError("expected '" + p + "'", tok_.line, tok_.col);
        advance();
    }
    std::string expect_ident()
    {
        if (tok_.kind != Token::Ident)
            throw ParseError("expected identifier", tok_.line, tok_.col);
        std::string t = tok_.text;
        advance();
        return t;
    }
    long long expect_number()
    {
        if (tok_.kind != Token::Number)
            throw ParseError("expected number", tok_.line, tok_.col);
        long long v = std::stoll(tok_.text);
        advance();
        return v;
    }

private:
    void advance()
    {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n')
                    ++pos_;
            } else {
                break;
            }
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::Ident;
            tok_.text = s_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::Number;
            tok_.text = s_.substr(start, pos_ - start);
        } else {
            tok_.kind = Token::Punct;
            tok_.text = std::string(1, c);
            ++pos_;
            ++col_;
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

struct PolyBuilder {
    uint32_t p;
    const std::map<std::string, int>& varIndex;
    int e;

    // term := [int] (* var(^int))* ; returns (coeff mod p, exponent vector)
    std::pair<uint32_t, Expo> parse_term(Lexer& lx) const
    {
        long long coeff = 1;
        bool sawCoeff = false, sawVar = false;
        Expo m(static_cast<size_t>(e), 0);
        while (true) {
            const Token& t = lx.peek();
            if (t.kind == Token::Number && !sawCoeff && !sawVar) {
                coeff = lx.expect_number();
                sawCoeff = true;
            } else if (t.kind == Token::Ident) {
                Token vt = lx.take();
                auto it = varIndex.find(vt.text);
                if (it == varIndex.end())
                    throw ParseError("unknown variable '" + vt.text + "'", vt.line, vt.col);
                long long exp = 1;
                if (lx.peek().kind == Token::Punct && lx.peek().text == "^") {
                    lx.take();
                    exp = lx.expect_number();
                    if (exp < 0)
                        throw ParseError("negative exponent", vt.line, vt.col);
                }
                m[static_cast<size_t>(it->second)] += static_cast<int>(exp);
                sawVar = true;
            } else {
                break;
            }
            if (lx.peek().kind == Token::Punct && lx.peek().text == "*")
                lx.take();
            else
                break;
        }
        if (!sawCoeff && !sawVar) {
            const Token& t = lx.peek();
            throw ParseError("expected a term", t.line, t.col);
        }
        long long c = coeff % static_cast<long long>(p);
        if (c < 0)
            c += p;
        return {static_cast<uint32_t>(c), m};
    }

    // poly := [-] term (( + | - ) term)*
    HomogPoly parse(Lexer& lx) const
    {
        std::vector<std::pair<uint32_t, Expo>> terms;
        int sign = 1;
        if (lx.peek().kind == Token::Punct && lx.peek().text == "-") {
            lx.take();
            sign = -1;
        }
        Token first = lx.peek();
        terms.push_back(apply_sign(parse_term(lx), sign));
        while (lx.peek().kind == Token::Punct &&
               (lx.peek().text == "+" || lx.peek().text == "-")) {
            sign = lx.peek().text == "+" ? 1 : -1;
            lx.take();
            terms.push_back(apply_sign(parse_term(lx), sign));
        }
        // homogeneity: all terms with nonzero coefficient must share one degree
        int degree = -1;
        for (auto& [c, m] : terms) {
            if (c == 0)
                continue;
            if (degree < 0)
                degree = total_degree(m);
            else if (total_degree(m) != degree)
                throw NonHomogeneous(mono_to_string(m, ordered_vars()));
        }
        if (degree < 0)
            degree = 0; // the zero polynomial
        HomogPoly f(p, degree);
        for (auto& [c, m] : terms)
            if (c != 0)
                f.add_term(m, c);
        (void)first;
        return f;
    }

    std::pair<uint32_t, Expo> apply_sign(std::pair<uint32_t, Expo> t, int sign) const
    {
        if (sign < 0 && t.first != 0)
            t.first = p - t.first;
        return t;
    }

    std::vector<std::string> ordered_vars() const
    {
        std::vector<std::string> v(static_cast<size_t>(e));
        for (auto& [name, idx] : varIndex)
            v[static_cast<size_t>(idx)] = name;
        return v;
    }
};

RingSpec parse_one_block(Lexer& lx)
{
    Token kw = lx.take();
    if (kw.kind != Token::Ident || kw.text != "ring")
        throw ParseError("expected 'ring'", kw.line, kw.col);
    std::string name = lx.expect_ident();
    lx.expect_punct("{");
    uint32_t prime = 0;
    bool sawPrime = false;
    std::vector<std::string> vars;
    std::vector<HomogPoly> gens;
    bool sawVars = false, sawIdeal = false;
    while (!(lx.peek().kind == Token::Punct && lx.peek().text == "}")) {
        Token key = lx.take();
        if (key.kind != Token::Ident)
            throw ParseError("expected a field name", key.line, key.col);
        lx.expect_punct("=");
        if (key.text == "prime") {
            long long v = lx.expect_number();
            if (v < 2 || v >= (1ll << 31) || !is_prime_u32(static_cast<uint32_t>(v)))
                throw NotPrime(static_cast<uint32_t>(std::max(0ll, v)));
            prime = static_cast<uint32_t>(v);
            sawPrime = true;
        } else if (key.text == "vars") {
            std::map<std::string, int> seen;
            while (true) {
                Token vt = lx.take();
                if (vt.kind != Token::Ident)
                    throw ParseError("expected variable name", vt.line, vt.col);
                if (seen.count(vt.text))
                    throw ParseError("duplicate variable '" + vt.text + "'", vt.line, vt.col);
                seen[vt.text] = static_cast<int>(vars.size());
                vars.push_back(vt.text);
                if (lx.peek().kind == Token::Punct && lx.peek().text == ",")
                    lx.take();
                else
                    break;
            }
            sawVars = true;
        } else if (key.text == "ideal") {
            if (!sawPrime || !sawVars)
                throw ParseError("'ideal' must come after 'prime' and 'vars'", key.line, key.col);
            std::map<std::string, int> varIndex;
            for (size_t i = 0; i < vars.size(); ++i)
                varIndex[vars[i]] = static_cast<int>(i);
            PolyBuilder pb{prime, varIndex, static_cast<int>(vars.size())};
            // `ideal = 0;` is the zero ideal
            if (lx.peek().kind == Token::Number && lx.peek().text == "0") {
                lx.take();
            } else {
                while (true) {
                    HomogPoly f = pb.parse(lx);
                    if (!f.is_zero())
                        gens.push_back(std::move(f));
                    if (lx.peek().kind == Token::Punct && lx.peek().text == ",")
                        lx.take();
                    else
                        break;
                }
            }
            sawIdeal = true;
        } else {
            throw ParseError("unknown field '" + key.text + "'", key.line, key.col);
        }
        lx.expect_punct(";");
    }
    lx.expect_punct("}");
    if (!sawPrime || !sawVars || !sawIdeal)
        throw ParseError("ring block needs prime, vars and ideal", kw.line, kw.col);
    return RingSpec(prime, std::move(vars), std::move(gens), name);
}

} // namespace

std::vector<RingSpec> parse_ring_specs(const std::string& text)
{
    Lexer lx(text);
    std::vector<RingSpec> out;
    while (lx.peek().kind != Token::End)
        out.push_back(parse_one_block(lx));
    if (out.empty())
        throw ParseError("no ring block found", 1, 1);
    return out;
}

RingSpec parse_ring_spec(const std::string& text)
{
    std::vector<RingSpec> all = parse_ring_specs(text);
    if (all.size() != 1)
        throw ParseError("expected exactly one ring block", 1, 1);
    return all.front();
}

HomogPoly parse_poly(const std::string& text, const RingSpec& ring)
{
    Lexer lx(text);
    std::map<std::string, int> varIndex;
    for (size_t i = 0; i < ring.vars.size(); ++i)
        varIndex[ring.vars[i]] = static_cast<int>(i);
    PolyBuilder pb{ring.p, varIndex, ring.e};
    HomogPoly f = pb.parse(lx);
    if (lx.peek().kind != Token::End)
        throw ParseError("trailing input after polynomial", lx.peek().line, lx.peek().col);
    return f;
}

} // namespace bettilab
