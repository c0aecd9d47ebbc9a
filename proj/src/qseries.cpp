#include "multifan/qseries.hpp"

#include "multifan/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace multifan {

namespace {

// Multiply a truncated q-series by the polynomial factor (1 - c*t^b*q^g),
// g > 0.  Terms pushed past the truncation order are dropped.
void mul_numer_binomial(QSeriesRaw& series, const Cyclotomic& c, TExp b,
                        const Rat& g, const Rat& order) {
    QSeriesRaw shifted;
    for (const auto& [s, frac] : series) {
        Rat target = s + g;
        if (target > order) continue;
        TFraction piece = frac;
        piece.mul_monomial(b, c);
        piece.mul_scalar(Cyclotomic::from_rat(-1));
        shifted.emplace(target, std::move(piece));
    }
    for (auto& [s, piece] : shifted) {
        auto it = series.find(s);
        if (it == series.end())
            series.emplace(s, std::move(piece));
        else
            it->second.add(piece);
    }
}

// Multiply by 1/(1 - c*t^b*q^g) with g > 0 via the geometric recurrence
// R[s] = S[s] + c*t^b*R[s-g], processed in ascending q-order.
void mul_denom_binomial(QSeriesRaw& series, const Cyclotomic& c, TExp b,
                        const Rat& g, const Rat& order) {
    std::set<Rat> grid;
    for (const auto& [s, frac] : series)
        for (Rat e = s; e <= order; e += g) grid.insert(e);
    QSeriesRaw out;
    for (const Rat& s : grid) {
        TFraction acc;
        auto src = series.find(s);
        if (src != series.end()) acc = src->second;
        auto prev = out.find(s - g);
        if (prev != out.end()) {
            TFraction fed = prev->second;
            fed.mul_monomial(b, c);
            acc.add(fed);
        }
        out.emplace(s, std::move(acc));
    }
    series = std::move(out);
}

} // namespace

QSeriesRaw phi_factor_expand(TExp a, const Rat& f, const Rat& alpha_e,
                             const Rat& sigma, const Rat& order) {
    if (f < 0 || f >= 1)
        throw PreconditionUnmet("phi factor fractional part out of [0,1): " + f.get_str());
    QSeriesRaw series;
    series.emplace(Rat(0), TFraction(TLaurent::one()));
    auto root = [](const Rat& e) { return Cyclotomic::root_of_unity(e); };

    // Leading factor zeta^{-1/2} (1 - zeta alpha t^a q^f) / (1 - alpha t^a q^f).
    if (f == 0) {
        if (a == 0) {
            if (root(alpha_e).is_rational() && root(alpha_e).rational_value() == 1)
                throw DegenerateFactor("phi factor with a=0, f=0, alpha=1");
            Cyclotomic head = (Cyclotomic::from_rat(1) - root(sigma + alpha_e)) *
                              (Cyclotomic::from_rat(1) - root(alpha_e)).inverse();
            for (auto& [s, frac] : series) frac.mul_scalar(head);
        } else {
            TLaurent numer = TLaurent::one();
            numer.add_term(a, Rat(-1) * root(sigma + alpha_e));
            for (auto& [s, frac] : series) {
                frac.mul_laurent(numer);
                frac.div_binomial(alpha_e, a);
            }
        }
    } else {
        mul_numer_binomial(series, root(sigma + alpha_e), a, f, order);
        mul_denom_binomial(series, root(alpha_e), a, f, order);
    }
    for (auto& [s, frac] : series) frac.mul_scalar(root(-sigma / 2));

    // The infinite-product tail: for k >= 1 the exponents k+f and k-f both
    // exceed the truncation order once k is large enough, so the loop stops.
    for (long k = 1;; ++k) {
        Rat gp = Rat(k) + f;
        Rat gm = Rat(k) - f;
        bool touched = false;
        if (gp <= order) {
            mul_numer_binomial(series, root(sigma + alpha_e), a, gp, order);
            mul_denom_binomial(series, root(alpha_e), a, gp, order);
            touched = true;
        }
        if (gm <= order) {
            mul_numer_binomial(series, root(-sigma - alpha_e), -a, gm, order);
            mul_denom_binomial(series, root(-alpha_e), -a, gm, order);
            touched = true;
        }
        if (!touched) break;
    }
    return series;
}

namespace {

struct FactorSpec {
    TExp a;
    Rat f;
    Rat alpha_e;
};

// One summand of the genus: a rational weight, a root-of-unity prefactor
// exponent, and the phi factors attached to the rays of a maximal cone.
struct TermSpec {
    Rat weight;
    Rat prefactor_e;
    std::vector<FactorSpec> factors;
};

QSeriesRaw series_product(const QSeriesRaw& lhs, const QSeriesRaw& rhs,
                          const Rat& order) {
    QSeriesRaw out;
    for (const auto& [sa, fa] : lhs) {
        for (const auto& [sb, fb] : rhs) {
            Rat s = sa + sb;
            if (s > order) continue;
            TFraction piece = fa;
            piece.mul_fraction(fb);
            auto it = out.find(s);
            if (it == out.end())
                out.emplace(s, std::move(piece));
            else
                it->second.add(piece);
        }
    }
    return out;
}

QSeriesRaw evaluate_term(const TermSpec& term, const Rat& sigma, const Rat& order) {
    QSeriesRaw series;
    series.emplace(Rat(0), TFraction(TLaurent::one()));
    for (const FactorSpec& fs : term.factors)
        series = series_product(series,
                                phi_factor_expand(fs.a, fs.f, fs.alpha_e, sigma, order),
                                order);
    Cyclotomic scale = Cyclotomic::root_of_unity(term.prefactor_e);
    scale = Rat(term.weight) * scale;
    for (auto& [s, frac] : series) frac.mul_scalar(scale);
    return series;
}

} // namespace

ZVec generic_lattice_vector(const MultiFan& fan, int index) {
    ZVec v = fan.generic_vector(index);
    Int scale(1);
    for (const Cone& cone : fan.cones()) {
        std::vector<QVec> duals = fan.cone_duals(cone);
        for (const QVec& u : duals) {
            Rat p = dot(u, v);
            scale = lcm_int(scale, p.get_den());
        }
    }
    if (scale != 1)
        for (Int& c : v) c *= scale;
    return v;
}

GenusQSeries elliptic_genus_along(const MultiFan& fan, const ZVec& v,
                                  const Rat& sigma, const Rat& order,
                                  GenusKind kind, int jobs) {
    if (order < 0) throw PreconditionUnmet("negative q-series order");
    if (!fan.is_generic(v)) throw NotGeneric("vector is not generic for this multi-fan");
    const int n = fan.rank();

    // All pairings with cone duals must be integers: v has to lie in the
    // intersection of the dual lattices of every maximal cone.
    for (const Cone& cone : fan.cones()) {
        std::vector<QVec> duals = fan.cone_duals(cone);
        for (const QVec& u : duals)
            if (dot(u, v).get_den() != 1)
                throw NotGeneric("vector pairs fractionally with a cone dual; "
                                 "scale it into the intersection lattice");
    }

    Int breve_order(0);
    if (kind == GenusKind::Breve) {
        breve_order = sigma.get_den();
        for (const Cone& cone : fan.cones())
            if (gcd_int(fan.group_order(cone.rays), breve_order) != 1)
                throw NotCoprime("level shares a factor with an isotropy order");
    }

    // Assemble the full term list deterministically before any evaluation.
    std::vector<TermSpec> terms;
    std::vector<std::vector<int>> sectors;
    if (kind == GenusKind::Plain)
        sectors.push_back({});
    else
        sectors = fan.simplices();

    for (const std::vector<int>& K : sectors) {
        std::vector<FractionData> hats = fan.hat_HK(K);
        if (hats.empty()) continue;
        for (const FractionData& h1 : hats) {
            for (const Cone& cone : fan.cones()) {
                if (!std::includes(cone.rays.begin(), cone.rays.end(),
                                   K.begin(), K.end()))
                    continue;
                std::vector<QVec> duals = fan.cone_duals(cone);
                Int hi_order = fan.group_order(cone.rays);
                QuotientGroup HI = fan.group_HI(cone);

                TermSpec base;
                base.weight = Rat(Int(cone.w())) / Rat(hi_order);
                switch (kind) {
                case GenusKind::Plain:
                    base.prefactor_e = 0;
                    break;
                case GenusKind::Orbifold:
                    base.prefactor_e = sigma * h1.f_total;
                    break;
                case GenusKind::Breve:
                    base.prefactor_e = sigma * Rat(breve(h1.f_total, breve_order));
                    break;
                }

                // f_i: expansion of the sector representative in this cone's
                // edge basis -- the stored fractions for rays of K, zero else.
                QVec fcoords(cone.rays.size(), Rat(0));
                for (std::size_t j = 0; j < K.size(); ++j) {
                    auto pos = std::lower_bound(cone.rays.begin(), cone.rays.end(), K[j]);
                    fcoords[static_cast<std::size_t>(pos - cone.rays.begin())] = h1.f[j];
                }

                for (const ZVec& h2 : HI.elements()) {
                    TermSpec term = base;
                    term.factors.reserve(cone.rays.size());
                    for (std::size_t i = 0; i < cone.rays.size(); ++i) {
                        FactorSpec fs;
                        Rat pairing = -dot(duals[i], v);
                        fs.a = static_cast<TExp>(pairing.get_num().get_si());
                        fs.f = fcoords[i];
                        fs.alpha_e = frac_rat(-dot(duals[i], to_qvec(h2)));
                        term.factors.push_back(fs);
                    }
                    terms.push_back(std::move(term));
                }
            }
        }
    }

    // Evaluate terms (optionally in parallel), then fold in term order so the
    // result is independent of scheduling.
    std::vector<QSeriesRaw> partial(terms.size());
    if (jobs <= 1 || terms.size() <= 1) {
        for (std::size_t i = 0; i < terms.size(); ++i)
            partial[i] = evaluate_term(terms[i], sigma, order);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= terms.size()) return;
                try {
                    partial[i] = evaluate_term(terms[i], sigma, order);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        int count = std::min<int>(jobs, static_cast<int>(terms.size()));
        pool.reserve(static_cast<std::size_t>(count));
        for (int j = 0; j < count; ++j) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    QSeriesRaw acc;
    for (const QSeriesRaw& piece : partial) {
        for (const auto& [s, frac] : piece) {
            auto it = acc.find(s);
            if (it == acc.end())
                acc.emplace(s, frac);
            else
                it->second.add(frac);
        }
    }

    GenusQSeries out;
    out.rank = n;
    out.kind = kind;
    out.sigma = sigma;
    out.truncation = order;
    out.v = v;
    out.rho = 1;
    for (const auto& [s, frac] : acc) out.rho = lcm_int(out.rho, s.get_den());
    for (auto& [s, frac] : acc) out.coeffs.emplace(s, frac.reduce());

    // Normalizing by zeta^{n/2} must land every coefficient in the integral
    // cyclotomic ring; anything else means the sum failed to collapse.
    Cyclotomic norm = Cyclotomic::root_of_unity(sigma * Rat(n) / 2);
    for (const auto& [s, poly] : out.coeffs) {
        TLaurent scaled = poly.scaled(norm);
        for (const auto& [e, c] : scaled.terms())
            if (!c.integral())
                throw PolynomialityFailure("non-integral normalized coefficient at q^" +
                                           s.get_str() + ", t^" + std::to_string(e));
    }
    return out;
}

bool GenusQSeries::is_zero() const {
    for (const auto& [s, poly] : coeffs)
        if (!poly.is_zero()) return false;
    return true;
}

TLaurent GenusQSeries::normalized(const Rat& s) const {
    auto it = coeffs.find(s);
    if (it == coeffs.end()) return TLaurent();
    return it->second.scaled(Cyclotomic::root_of_unity(sigma * Rat(rank) / 2));
}

bool GenusQSeries::integral() const {
    for (const auto& [s, poly] : coeffs) {
        TLaurent scaled = normalized(s);
        for (const auto& [e, c] : scaled.terms())
            if (!c.integral()) return false;
    }
    return true;
}

long GenusQSeries::conductor() const {
    long m = 1;
    for (const auto& [s, poly] : coeffs)
        for (const auto& [e, c] : poly.terms())
            m = std::lcm(m, c.conductor());
    return m;
}

std::string series_machine_text(const GenusQSeries& s) {
    std::ostringstream os;
    os << "multifan-qseries 1\n";
    os << "kind ";
    switch (s.kind) {
    case GenusKind::Plain: os << "plain"; break;
    case GenusKind::Orbifold: os << "orbifold"; break;
    case GenusKind::Breve: os << "breve"; break;
    }
    os << "\nrank " << s.rank << "\n";
    os << "sigma " << s.sigma.get_str() << "\n";
    os << "order " << s.truncation.get_str() << "\n";
    os << "v " << vec_str(s.v) << "\n";
    os << "rho " << s.rho.get_str() << "\n";
    long m = s.conductor();
    os << "xi-order " << m << "\n";
    for (const auto& [q, poly] : s.coeffs) {
        os << "q " << q.get_str();
        if (poly.is_zero()) {
            os << " zero\n";
            continue;
        }
        os << "\n";
        for (const auto& [e, c] : poly.terms()) {
            Cyclotomic emb = c.embedded(m);
            os << "  t " << e << " xi";
            for (const Rat& coord : emb.coords()) os << " " << coord.get_str();
            os << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

std::string series_human_text(const GenusQSeries& s) {
    std::ostringstream os;
    switch (s.kind) {
    case GenusKind::Plain: os << "elliptic genus"; break;
    case GenusKind::Orbifold: os << "orbifold elliptic genus"; break;
    case GenusKind::Breve: os << "modified orbifold elliptic genus"; break;
    }
    os << " along v = " << vec_str(s.v) << ", sigma = " << s.sigma.get_str()
       << ", through q^" << s.truncation.get_str() << "\n";
    if (s.is_zero()) {
        os << "  identically zero to this order\n";
        return os.str();
    }
    for (const auto& [q, poly] : s.coeffs)
        os << "  q^(" << q.get_str() << "): " << poly.str() << "\n";
    return os.str();
}

} // namespace multifan
