#include "sytcount/polyint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sytcount {

Monomial::Monomial(std::vector<std::pair<std::string, unsigned>> powers) {
    std::sort(powers.begin(), powers.end());
    for (auto& [v, e] : powers) {
        if (e == 0) continue;
        if (!powers_.empty() && powers_.back().first == v)
            powers_.back().second += e;
        else
            powers_.emplace_back(std::move(v), e);
    }
}

unsigned Monomial::exponent(const std::string& var) const {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), var,
                               [](const auto& p, const std::string& v) { return p.first < v; });
    return (it != powers_.end() && it->first == var) ? it->second : 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : powers_) d += e;
    return d;
}

Monomial Monomial::with(const std::string& var, unsigned e) const {
    Monomial r;
    r.powers_.reserve(powers_.size() + 1);
    bool placed = false;
    for (const auto& p : powers_) {
        if (!placed && var <= p.first) {
            if (e > 0) r.powers_.emplace_back(var, e);
            placed = true;
            if (p.first == var) continue;
        }
        r.powers_.push_back(p);
    }
    if (!placed && e > 0) r.powers_.emplace_back(var, e);
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<std::string, unsigned>> all = a.powers_;
    all.insert(all.end(), b.powers_.begin(), b.powers_.end());
    return Monomial(std::move(all));
}

MPoly::MPoly(const BigRat& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(const std::string& name) { return monomial(BigRat(1), name, 1); }

MPoly MPoly::monomial(const BigRat& c, const std::string& name, unsigned e) {
    return term(Monomial({{name, e}}), c);
}

MPoly MPoly::term(const Monomial& m, const BigRat& c) {
    MPoly p;
    p.add_term(m, c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.powers().empty());
}

BigRat MPoly::constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? BigRat(0) : it->second;
}

std::vector<std::string> MPoly::variables() const {
    std::vector<std::string> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.powers()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

unsigned MPoly::degree(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

void MPoly::add_term(const Monomial& m, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const BigRat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(unsigned e) const {
    if (e == 0) return MPoly(1);
    if (terms_.empty()) return MPoly();
    std::vector<std::pair<Monomial, BigRat>> base(terms_.begin(), terms_.end());
    const std::size_t t = base.size();

    // Sum over compositions (k_1..k_t) of e of
    //   multinomial(e; k) * prod c_i^{k_i} * prod m_i^{k_i}.
    MPoly result;
    std::vector<long> parts(t, 0);
    auto visit = [&](auto&& self, std::size_t idx, long remaining) -> void {
        if (idx + 1 == t) {
            parts[idx] = remaining;
            BigRat coef(multinomial(static_cast<long>(e), parts));
            std::vector<std::pair<std::string, unsigned>> powers;
            for (std::size_t i = 0; i < t; ++i) {
                if (parts[i] == 0) continue;
                BigRat ci;
                mpz_pow_ui(ci.get_num_mpz_t(), base[i].second.get_num_mpz_t(), static_cast<unsigned long>(parts[i]));
                mpz_pow_ui(ci.get_den_mpz_t(), base[i].second.get_den_mpz_t(), static_cast<unsigned long>(parts[i]));
                coef *= ci;
                for (const auto& [v, ev] : base[i].first.powers())
                    powers.emplace_back(v, ev * static_cast<unsigned>(parts[i]));
            }
            result.add_term(Monomial(std::move(powers)), coef);
            return;
        }
        for (long k = 0; k <= remaining; ++k) {
            parts[idx] = k;
            self(self, idx + 1, remaining - k);
        }
    };
    visit(visit, 0, static_cast<long>(e));
    return result;
}

BigRat MPoly::evaluate(const std::map<std::string, BigRat>& at) const {
    BigRat sum = 0;
    for (const auto& [m, c] : terms_) {
        BigRat term = c;
        for (const auto& [v, e] : m.powers()) {
            auto it = at.find(v);
            if (it == at.end()) throw std::invalid_argument("evaluate: no value for variable " + v);
            for (unsigned i = 0; i < e; ++i) term *= it->second;
        }
        sum += term;
    }
    return sum;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    std::vector<std::pair<Monomial, BigRat>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return a.first.total_degree() > b.first.total_degree();
    });
    for (const auto& [m, c] : ordered) {
        BigRat mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        bool unit = (mag == 1) && !m.powers().empty();
        if (!unit) os << mag.get_str();
        bool star = !unit;
        for (const auto& [v, e] : m.powers()) {
            if (star) os << '*';
            os << v;
            if (e > 1) os << '^' << e;
            star = true;
        }
    }
    return os.str();
}

MPoly derivative(const MPoly& p, const std::string& var) {
    MPoly r;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(var);
        if (e > 0) r += MPoly::term(m.with(var, e - 1), c * e);
    }
    return r;
}

MPoly antiderivative(const MPoly& p, const std::string& var) {
    MPoly r;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(var) + 1;
        r += MPoly::term(m.with(var, e), c / BigRat(e));
    }
    return r;
}

MPoly substitute(const MPoly& p, const std::string& var, const MPoly& value) {
    MPoly r;
    std::vector<MPoly> powers{MPoly(1)};
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(var);
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        r += MPoly::term(m.without(var), c) * powers[e];
    }
    return r;
}

MPoly chain_integrate(const MPoly& p, std::span<const std::string> vars, const MPoly& upper) {
    MPoly acc = p;
    for (std::size_t j = vars.size(); j-- > 0;) {
        MPoly anti = antiderivative(acc, vars[j]);
        MPoly lower = j == 0 ? MPoly(0) : MPoly::var(vars[j - 1]);
        acc = substitute(anti, vars[j], upper) - substitute(anti, vars[j], lower);
    }
    return acc;
}

BigRat dirichlet_monomial(std::span<const long> exponents) {
    BigInt num = 1;
    long sum = 0;
    for (long a : exponents) {
        if (a < 0) throw std::domain_error("dirichlet_monomial: negative exponent");
        num *= factorial(a);
        sum += a;
    }
    return make_rat(num, factorial(sum + static_cast<long>(exponents.size())));
}

BigRat simplex_integrate(const MPoly& p, std::span<const std::string> vars) {
    BigRat total = 0;
    std::vector<long> exps(vars.size());
    for (const auto& [m, c] : p.terms()) {
        unsigned matched = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            exps[i] = m.exponent(vars[i]);
            matched += static_cast<unsigned>(exps[i]);
        }
        if (matched != m.total_degree())
            throw std::invalid_argument("simplex_integrate: polynomial has variables outside the simplex");
        total += c * dirichlet_monomial(exps);
    }
    return total;
}

namespace {

void require_stirling_range(long n, long k, long m) {
    if (k < 1 || m < k || n < k) throw std::domain_error("stirling integral: need 1 <= k <= m and n >= k");
}

MPoly linear_form(const std::vector<std::string>& x, long k, bool weighted) {
    MPoly f;
    for (long i = 1; i <= k; ++i) f += MPoly::monomial(BigRat(weighted ? i : 1), x[i - 1], 1);
    return f;
}

}  // namespace

BigRat stirling2_expectation(long n, long k, long m) {
    require_stirling_range(n, k, m);
    const auto x = indexed_vars("x", static_cast<std::size_t>(m));
    const MPoly integrand = linear_form(x, k, false).pow(static_cast<unsigned>(n - k)) * BigRat(factorial(m));
    const BigRat expectation = chain_integrate(integrand, x).constant();
    return BigRat(binomial(n + m - k, m)) * expectation;
}

BigRat stirling2_chain(long n, long k, long m) {
    require_stirling_range(n, k, m);
    const auto x = indexed_vars("x", static_cast<std::size_t>(m));
    const MPoly integrand = linear_form(x, k, false).pow(static_cast<unsigned>(n - k));
    return BigRat(falling(n + m - k, m)) * chain_integrate(integrand, x).constant();
}

BigRat stirling2_simplex(long n, long k, long m) {
    require_stirling_range(n, k, m);
    const auto x = indexed_vars("x", static_cast<std::size_t>(m));
    const MPoly integrand = linear_form(x, k, true).pow(static_cast<unsigned>(n - k));
    return BigRat(falling(n + m - k, m)) * simplex_integrate(integrand, x);
}

std::vector<std::string> indexed_vars(const std::string& prefix, std::size_t count) {
    std::vector<std::string> v;
    v.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

}  // namespace sytcount
