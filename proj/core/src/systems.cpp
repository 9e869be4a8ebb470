#include "burgess/systems.hpp"
#include "wide_int.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace burgess {

namespace {

bool graded_less(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a > b;
}

// All multi-indices of dimension n with total degree exactly `total`,
// respecting per-variable caps, in descending lex order.
void enumerate_degree(std::size_t n, std::uint32_t total, const std::vector<std::uint32_t>& caps, std::size_t i,
                      Monomial& cur, std::vector<Monomial>& out) {
    if (i + 1 == n) {
        if (total <= caps[i]) {
            cur.exps[i] = total;
            out.push_back(cur);
        }
        cur.exps[i] = 0;
        return;
    }
    for (std::uint32_t e = std::min(total, caps[i]) + 1; e-- > 0;) {
        cur.exps[i] = e;
        enumerate_degree(n, total - e, caps, i + 1, cur, out);
    }
    cur.exps[i] = 0;
}

std::vector<Monomial> capped_exponents(const std::vector<std::uint32_t>& caps, std::uint32_t k) {
    std::vector<Monomial> out;
    Monomial cur(caps.size());
    for (std::uint32_t t = 1; t <= k; ++t) enumerate_degree(caps.size(), t, caps, 0, cur, out);
    return out;
}

}  // namespace

MonomialSystem::MonomialSystem(std::size_t n, std::vector<Monomial> exponents, SystemKind kind)
    : n_(n), lambda_(std::move(exponents)), kind_(kind) {
    if (n == 0) throw DegenerateSystem("system dimension must be >= 1");
    if (lambda_.empty()) throw DegenerateSystem("empty exponent set");
    for (const Monomial& b : lambda_)
        if (b.dim() != n) throw DegenerateSystem("multi-index dimension does not match n");
    std::sort(lambda_.begin(), lambda_.end(), graded_less);
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        const Monomial& b = lambda_[i];
        if (b.is_constant()) throw DegenerateSystem("the zero multi-index is not allowed");
        if (i > 0 && lambda_[i - 1] == b) throw DegenerateSystem("duplicate multi-index (system not reduced)");
        d_ = std::max(d_, b.degree());
        m_ += b.degree();
    }
}

MonomialSystem MonomialSystem::custom(std::size_t n, std::vector<Monomial> exponents) {
    return MonomialSystem(n, std::move(exponents), SystemKind::custom);
}

bool MonomialSystem::contains(const Monomial& beta) const {
    return std::binary_search(lambda_.begin(), lambda_.end(), beta, graded_less);
}

bool MonomialSystem::has_linear_monomials() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (!contains(Monomial::unit(n_, i))) return false;
    return true;
}

std::string MonomialSystem::descriptor() const {
    std::ostringstream os;
    switch (kind_) {
        case SystemKind::standard:
            os << "standard(" << n_ << "," << d_ << ")";
            break;
        case SystemKind::ack:
            os << "ack(";
            for (std::size_t i = 0; i < caps_.size(); ++i) os << (i ? "," : "") << caps_[i];
            os << ";" << total_cap_ << ")";
            break;
        case SystemKind::custom:
            os << "custom(";
            for (std::size_t i = 0; i < lambda_.size(); ++i) {
                if (i) os << ";";
                for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << lambda_[i].exps[j];
            }
            os << ")";
            break;
    }
    return os.str();
}

MonomialSystem standard_system(std::size_t n, std::uint32_t d) {
    if (n < 1 || d < 1) throw DegenerateSystem("standard system needs n >= 1 and d >= 1");
    std::vector<std::uint32_t> caps(n, d);
    MonomialSystem s(n, capped_exponents(caps, d), SystemKind::standard);
    s.caps_ = std::move(caps);
    s.total_cap_ = d;
    return s;
}

MonomialSystem ack_system(std::vector<std::uint32_t> caps, std::uint32_t k) {
    if (caps.empty()) throw DegenerateSystem("ack system needs at least one variable");
    for (std::size_t i = 0; i < caps.size(); ++i)
        if (caps[i] < 1 || k < 1)
            throw DegenerateSystem("variable x" + std::to_string(i + 1) + " has no monomial in the ack system");
    const std::size_t n = caps.size();
    MonomialSystem s(n, capped_exponents(caps, k), SystemKind::ack);
    s.caps_ = std::move(caps);
    s.total_cap_ = k;
    return s;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    detail::u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t standard_rank(std::size_t n, std::uint32_t d) { return binomial(n + d, n) - 1; }

std::uint64_t standard_weight(std::size_t n, std::uint32_t d) {
    const detail::u128 num = static_cast<detail::u128>(d) * binomial(n + d, n) * n;
    return static_cast<std::uint64_t>(num / (n + 1));
}

TdiCertificate is_tdi(const MonomialSystem& system) {
    const std::size_t n = system.dim();
    // Variables 0..n-1 are x, n..2n-1 are xi.
    std::vector<IntPoly> images;
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(IntPoly::variable(2 * n, i) + IntPoly::variable(2 * n, n + i));
    for (const Monomial& beta : system.exponents()) {
        const IntPoly expanded = substitute<IntegerRing>(IntPoly::monomial(beta, 1), images);
        for (auto it = expanded.terms().rbegin(); it != expanded.terms().rend(); ++it) {
            Monomial gamma(std::vector<std::uint32_t>(it->first.exps.begin(), it->first.exps.begin() + n));
            if (gamma.is_constant() || system.contains(gamma)) continue;
            TdiCertificate cert;
            cert.tdi = false;
            cert.beta = beta;
            cert.gamma = gamma;
            cert.coefficient = it->second;
            std::string term = std::to_string(it->second);
            for (std::size_t i = 0; i < n; ++i) {
                const auto e = it->first.exps[n + i];
                if (e) term += "*xi" + std::to_string(i + 1) + (e > 1 ? "^" + std::to_string(e) : "");
            }
            for (std::size_t i = 0; i < n; ++i) {
                const auto e = gamma.exps[i];
                if (e) term += "*x" + std::to_string(i + 1) + (e > 1 ? "^" + std::to_string(e) : "");
            }
            cert.term = term;
            return cert;
        }
    }
    return {};
}

bool is_downward_closed(const MonomialSystem& system) {
    const std::size_t n = system.dim();
    for (const Monomial& beta : system.exponents()) {
        // Every gamma <= beta componentwise (gamma != 0) must be present.
        Monomial gamma(n);
        for (;;) {
            std::size_t i = 0;
            while (i < n && gamma.exps[i] == beta.exps[i]) gamma.exps[i++] = 0;
            if (i == n) break;
            ++gamma.exps[i];
            if (!system.contains(gamma)) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::uint32_t> parse_uint_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw DegenerateSystem("malformed integer list '" + s + "'");
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    if (out.empty()) throw DegenerateSystem("empty integer list");
    return out;
}

}  // namespace

MonomialSystem parse_system(const std::string& descriptor) {
    std::istringstream in(descriptor);
    std::string kind;
    in >> kind;
    if (kind == "standard") {
        long n = 0, d = 0;
        if (!(in >> n >> d) || n < 1 || d < 1) throw DegenerateSystem("usage: standard <n> <d>");
        return standard_system(static_cast<std::size_t>(n), static_cast<std::uint32_t>(d));
    }
    if (kind == "ack") {
        std::string caps;
        long k = 0;
        if (!(in >> caps >> k) || k < 1) throw DegenerateSystem("usage: ack <k1,...,kn> <k>");
        return ack_system(parse_uint_list(caps), static_cast<std::uint32_t>(k));
    }
    if (kind == "custom") {
        std::string exps;
        in >> exps;
        std::vector<Monomial> lambda;
        std::stringstream ss(exps);
        std::string item;
        while (std::getline(ss, item, ';')) lambda.emplace_back(parse_uint_list(item));
        if (lambda.empty()) throw DegenerateSystem("usage: custom <b1,..,bn;...>");
        const std::size_t n = lambda.front().dim();
        return MonomialSystem::custom(n, std::move(lambda));
    }
    throw DegenerateSystem("unknown system kind '" + kind + "'");
}

}  // namespace burgess
