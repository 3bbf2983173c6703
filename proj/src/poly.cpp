#include "arith/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "arith/errors.hpp"

namespace arith {

SqFreePoly::SqFreePoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw BadInput("variable count must be >= 0");
    if (nvars > 62) throw BadInput("at most 62 variables are supported");
}

Int SqFreePoly::coef(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void SqFreePoly::add_term(Mask m, const Int& c) {
    if (m & ~full_mask()) throw IndexOutOfRange("monomial uses an undeclared variable");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Mask SqFreePoly::support_union() const {
    Mask u = 0;
    for (const auto& [m, c] : terms_) u |= m;
    return u;
}

SqFreePoly SqFreePoly::negated() const {
    SqFreePoly g(nvars_);
    for (const auto& [m, c] : terms_) g.terms_.emplace(m, -c);
    return g;
}

SqFreePoly SqFreePoly::plus_constant(const Int& delta) const {
    SqFreePoly g = *this;
    g.add_term(0, delta);
    return g;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Token {
    enum Kind { Integer, Var, Plus, Minus, Star, Caret, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::End, ""};
        char c = s_[pos_];
        if (c == '+') { ++pos_; return {Token::Plus, "+"}; }
        if (c == '-') { ++pos_; return {Token::Minus, "-"}; }
        if (c == '*') { ++pos_; return {Token::Star, "*"}; }
        if (c == '^') { ++pos_; return {Token::Caret, "^"}; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Integer, s_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::Var, s_.substr(start, pos_ - start)};
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' in expression");
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

struct RawTerm {
    Int coefficient = 1;
    std::map<std::string, int> exponents; // variable -> accumulated exponent
};

// Shared front end for the square-free and the general parser.
std::vector<RawTerm> parse_terms(const std::string& text) {
    Lexer lex(text);
    Token tok = lex.next();
    if (tok.kind == Token::End) throw SyntaxError("empty expression");

    std::vector<RawTerm> out;
    int sign = 1;
    if (tok.kind == Token::Minus) { // unary minus at expression head
        sign = -1;
        tok = lex.next();
    }
    for (;;) {
        RawTerm term;
        term.coefficient = sign;
        bool saw_factor = false;
        for (;;) {
            if (tok.kind == Token::Integer) {
                term.coefficient *= Int(tok.text);
                tok = lex.next();
            } else if (tok.kind == Token::Var) {
                std::string name = tok.text;
                int expo = 1;
                tok = lex.next();
                if (tok.kind == Token::Caret) {
                    tok = lex.next();
                    if (tok.kind != Token::Integer) throw SyntaxError("exponent must be an integer literal");
                    if (tok.text.size() > 6) throw SyntaxError("exponent out of range");
                    expo = std::stoi(tok.text);
                    if (expo < 1) throw SyntaxError("exponent must be a positive integer");
                    tok = lex.next();
                }
                term.exponents[name] += expo;
            } else {
                throw SyntaxError("expected a number or a variable");
            }
            saw_factor = true;
            if (tok.kind == Token::Star) {
                tok = lex.next();
                continue;
            }
            break;
        }
        if (!saw_factor) throw SyntaxError("empty term");
        out.push_back(std::move(term));
        if (tok.kind == Token::End) break;
        if (tok.kind == Token::Plus) sign = 1;
        else if (tok.kind == Token::Minus) sign = -1;
        else throw SyntaxError("expected '+', '-' or end of expression");
        tok = lex.next();
    }
    return out;
}

std::vector<std::string> assign_vars(const std::vector<RawTerm>& terms,
                                     const std::optional<std::vector<std::string>>& declared,
                                     std::map<std::string, int>& index_of) {
    std::vector<std::string> names;
    if (declared) {
        names = *declared;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (index_of.count(names[i])) throw BadInput("duplicate declared variable");
            index_of[names[i]] = static_cast<int>(i);
        }
        for (const RawTerm& t : terms)
            for (const auto& [name, e] : t.exponents)
                if (!index_of.count(name)) throw UnknownVariable("unknown variable '" + name + "'");
    } else {
        for (const RawTerm& t : terms)
            for (const auto& [name, e] : t.exponents)
                if (!index_of.count(name)) {
                    index_of[name] = static_cast<int>(names.size());
                    names.push_back(name);
                }
    }
    return names;
}

} // namespace

ParsedPoly parse_sqfree(const std::string& text,
                        const std::optional<std::vector<std::string>>& declared) {
    std::vector<RawTerm> raw = parse_terms(text);
    // Raw terms are order-sensitive only through first appearance, so check
    // exponents before assigning indices to keep the error actionable.
    for (const RawTerm& t : raw)
        for (const auto& [name, e] : t.exponents)
            if (e != 1) throw NotSquareFree("variable '" + name + "' has exponent " + std::to_string(e));
    std::map<std::string, int> index_of;
    std::vector<std::string> names = assign_vars(raw, declared, index_of);
    SqFreePoly f(static_cast<int>(names.size()));
    for (const RawTerm& t : raw) {
        Mask m = 0;
        for (const auto& [name, e] : t.exponents) m |= Mask(1) << index_of[name];
        f.add_term(m, t.coefficient);
    }
    return {std::move(f), std::move(names)};
}

ParsedGeneralPoly parse_general_poly(const std::string& text,
                                     const std::optional<std::vector<std::string>>& declared) {
    std::vector<RawTerm> raw = parse_terms(text);
    std::map<std::string, int> index_of;
    std::vector<std::string> names = assign_vars(raw, declared, index_of);
    GeneralPoly F;
    F.nvars = static_cast<int>(names.size());
    for (const RawTerm& t : raw) {
        std::vector<int> expo(names.size(), 0);
        for (const auto& [name, e] : t.exponents) expo[static_cast<std::size_t>(index_of[name])] = e;
        auto [it, inserted] = F.terms.emplace(std::move(expo), t.coefficient);
        if (!inserted) {
            it->second += t.coefficient;
            if (it->second == 0) F.terms.erase(it);
        }
    }
    return {std::move(F), std::move(names)};
}

// ---------------------------------------------------------------------------
// operations

SqFreePoly charpoly_of_matrix(const IntMatrix& L) {
    const int n = L.size();
    if (n > 30) throw BadInput("matrix too large for an explicit characteristic polynomial");
    const IntMatrix negL = L.negate();
    SqFreePoly f(n);
    const Mask full = f.full_mask();
    for (Mask vars = 0; vars <= full; ++vars) {
        Mask comp = full & ~vars;
        if (comp == 0) {
            f.add_term(vars, Int(1));
            continue;
        }
        IndexSet I;
        for (int i = 0; i < n; ++i)
            if (comp & (Mask(1) << i)) I.push_back(i + 1);
        f.add_term(vars, principal_minor(negL, I));
    }
    return f;
}

SqFreePoly shift(const SqFreePoly& f, const IntVec& d) {
    if (static_cast<int>(d.size()) != f.nvars()) throw DimensionMismatch("shift vector length differs from nvars");
    SqFreePoly g(f.nvars());
    for (const auto& [t, c] : f.terms()) {
        // For every submask u of t, the term contributes c * prod_{i in u} d_i
        // to the monomial t \ u.
        Mask u = t;
        for (;;) {
            Int p = c;
            Mask bits = u;
            while (bits) {
                int i = std::countr_zero(bits);
                bits &= bits - 1;
                p *= d[static_cast<std::size_t>(i)];
            }
            g.add_term(t ^ u, p);
            if (u == 0) break;
            u = (u - 1) & t;
        }
    }
    return g;
}

namespace {

Mask drop_bit(Mask m, int bit) {
    Mask low = m & ((Mask(1) << bit) - 1);
    Mask high = m >> (bit + 1);
    return low | (high << bit);
}

} // namespace

SqFreePoly partial(const SqFreePoly& f, int s) {
    if (s < 1 || s > f.nvars()) throw IndexOutOfRange("variable index outside 1..nvars");
    const Mask bit = Mask(1) << (s - 1);
    SqFreePoly g(f.nvars() - 1);
    for (const auto& [t, c] : f.terms())
        if (t & bit) g.add_term(drop_bit(t, s - 1), c);
    return g;
}

SqFreePoly substitute(const SqFreePoly& f, int s, const Int& v) {
    if (s < 1 || s > f.nvars()) throw IndexOutOfRange("variable index outside 1..nvars");
    const Mask bit = Mask(1) << (s - 1);
    SqFreePoly g(f.nvars() - 1);
    for (const auto& [t, c] : f.terms()) {
        if (t & bit) g.add_term(drop_bit(t, s - 1), c * v);
        else g.add_term(drop_bit(t, s - 1), c);
    }
    return g;
}

Int eval(const SqFreePoly& f, const IntVec& d) {
    if (static_cast<int>(d.size()) != f.nvars()) throw DimensionMismatch("point length differs from nvars");
    Int acc = 0;
    for (const auto& [t, c] : f.terms()) {
        Int p = c;
        Mask bits = t;
        while (bits) {
            int i = std::countr_zero(bits);
            bits &= bits - 1;
            p *= d[static_cast<std::size_t>(i)];
        }
        acc += p;
    }
    return acc;
}

ShiftedLinearForm shifted_linear_form(const SqFreePoly& f, const IntVec& d) {
    if (static_cast<int>(d.size()) != f.nvars()) throw DimensionMismatch("point length differs from nvars");
    ShiftedLinearForm out;
    out.value = 0;
    out.lin.assign(d.size(), Int(0));
    std::vector<int> vars;
    std::vector<Int> pre, suf;
    for (const auto& [t, c] : f.terms()) {
        vars.clear();
        Mask bits = t;
        while (bits) {
            vars.push_back(std::countr_zero(bits));
            bits &= bits - 1;
        }
        const std::size_t k = vars.size();
        pre.assign(k + 1, Int(1));
        suf.assign(k + 1, Int(1));
        for (std::size_t i = 0; i < k; ++i) pre[i + 1] = pre[i] * d[static_cast<std::size_t>(vars[i])];
        for (std::size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * d[static_cast<std::size_t>(vars[i])];
        out.value += c * pre[k];
        // coefficient of x_s in the shifted polynomial collects prod over T\{s}
        for (std::size_t i = 0; i < k; ++i)
            out.lin[static_cast<std::size_t>(vars[i])] += c * pre[i] * suf[i + 1];
    }
    return out;
}

std::optional<Mask> dominant_monomial(const SqFreePoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("the zero polynomial has no monomials");
    Mask u = f.support_union();
    if (f.coef(u) != 0) return u;
    return std::nullopt;
}

bool leading_positive(const SqFreePoly& f) {
    auto dom = dominant_monomial(f);
    if (!dom) throw NotDominated("polynomial has no dominant monomial");
    return f.coef(*dom) > 0;
}

// ---------------------------------------------------------------------------
// variable-disjoint factorization

namespace {

using TermMap = std::map<Mask, Int>;

Int coef_of(const TermMap& t, Mask m) {
    auto it = t.find(m);
    return it == t.end() ? Int(0) : it->second;
}

// f splits over the bipartition (U, W) iff
//   coef(A|B) * coef(U|W) == coef(A|W) * coef(U|B)
// for the set-parts A, B of every pair of present terms.
bool rank_one(const TermMap& terms, Mask U, Mask W, const Int& cf) {
    for (const auto& [s1, c1] : terms) {
        Mask A = s1 & U;
        for (const auto& [s2, c2] : terms) {
            Mask B = s2 & W;
            if (coef_of(terms, A | B) * cf != coef_of(terms, A | W) * coef_of(terms, U | B))
                return false;
        }
    }
    return true;
}

// Splits recursively; factors stay in the parent variable space.
void split_rec(const TermMap& terms, Mask vars, std::vector<std::pair<TermMap, Mask>>& out) {
    const int k = std::popcount(vars);
    if (k <= 1) {
        out.emplace_back(terms, vars);
        return;
    }
    const Int cf = coef_of(terms, vars); // dominant coefficient, nonzero
    const int v0 = std::countr_zero(vars);
    const Mask rest = vars & ~(Mask(1) << v0);
    // U runs over proper subsets of vars containing v0
    for (Mask w = rest; w != 0; w = (w - 1) & rest) {
        const Mask U = vars & ~w;
        const Mask W = w;
        if (!rank_one(terms, U, W, cf)) continue;
        // candidate factor on U from the B = W slice, made primitive with a
        // positive dominant coefficient
        TermMap g;
        Int content = 0;
        for (const auto& [s, c] : terms)
            if ((s & W) == W) {
                g[s & U] = c;
                content = gcd(content, c);
            }
        if (content == 0) continue;
        if (g[U] < 0) content = -content;
        for (auto& [m, c] : g) c = divexact(c, content);
        // cofactor on W by exact division; Gauss guarantees integrality, but
        // verify and fall through to the next bipartition on any mismatch
        TermMap h;
        const Int gU = g[U];
        bool ok = true;
        for (const auto& [s, c] : terms) {
            if ((s & U) != U) continue;
            Int num = c;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), gU.get_mpz_t());
            if (q * gU != num) { ok = false; break; }
            h[s & W] = q;
        }
        if (!ok) continue;
        // multiply back and compare
        TermMap prod;
        for (const auto& [ma, ca] : g)
            for (const auto& [mb, cb] : h) {
                Int& slot = prod[ma | mb];
                slot += ca * cb;
            }
        for (auto it = prod.begin(); it != prod.end();)
            it = it->second == 0 ? prod.erase(it) : std::next(it);
        if (prod != terms) continue;
        split_rec(g, U, out);
        split_rec(h, W, out);
        return;
    }
    out.emplace_back(terms, vars); // indecomposable
}

} // namespace

std::vector<Factor> variable_disjoint_factor(const SqFreePoly& f) {
    auto dom = dominant_monomial(f);
    if (!dom) throw NotDominated("polynomial has no dominant monomial");
    if (*dom != f.full_mask())
        throw VariableUnused("some declared variable occurs in no term");

    std::vector<std::pair<TermMap, Mask>> parts;
    split_rec(f.terms(), f.full_mask(), parts);

    std::vector<Factor> out;
    out.reserve(parts.size());
    for (auto& [terms, vars] : parts) {
        std::vector<int> positions;
        for (int i = 0; i < f.nvars(); ++i)
            if (vars & (Mask(1) << i)) positions.push_back(i);
        SqFreePoly p(static_cast<int>(positions.size()));
        for (const auto& [m, c] : terms) {
            Mask packed = 0;
            for (std::size_t j = 0; j < positions.size(); ++j)
                if (m & (Mask(1) << positions[j])) packed |= Mask(1) << j;
            p.add_term(packed, c);
        }
        out.push_back(Factor{std::move(p), std::move(positions)});
    }
    std::sort(out.begin(), out.end(),
              [](const Factor& a, const Factor& b) { return a.vars.front() < b.vars.front(); });
    return out;
}

} // namespace arith
