#include "deltahall/delta.hpp"

#include "deltahall/errors.hpp"

namespace deltahall {

DeltaElement DeltaElement::basis(int class_id, long q) {
    DeltaElement e;
    e.terms_[class_id] = QuadNumber::from_int(q, 1);
    return e;
}

QuadNumber DeltaElement::coeff(int class_id) const {
    auto it = terms_.find(class_id);
    return it == terms_.end() ? QuadNumber() : it->second;
}

void DeltaElement::add_term(int class_id, const QuadNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(class_id, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DeltaElement operator+(const DeltaElement& x, const DeltaElement& y) {
    DeltaElement r = x;
    for (const auto& [id, c] : y.terms_) r.add_term(id, c);
    return r;
}

DeltaElement operator-(const DeltaElement& x, const DeltaElement& y) {
    DeltaElement r = x;
    for (const auto& [id, c] : y.terms_) r.add_term(id, -c);
    return r;
}

DeltaElement operator*(const QuadNumber& c, const DeltaElement& x) {
    DeltaElement r;
    if (c.is_zero()) return r;
    for (const auto& [id, v] : x.terms_) r.terms_[id] = c * v;
    return r;
}

long long lin_bracket(const Quiver& quiver, const DimVector& l,
                      const DimVector& i, const DimVector& n) {
    return euler_form(quiver, l, i) + euler_form(quiver, i, i) +
           euler_form(quiver, i, n) - euler_form(quiver, l, n);
}

namespace {

// (x + y - z)/2 entrywise; nullopt when an entry is odd or negative.
std::optional<DimVector> pinned_dim(const DimVector& x, const DimVector& y,
                                    const DimVector& z) {
    std::vector<int> e(x.size());
    for (int i = 0; i < x.size(); ++i) {
        int s = x[i] + y[i] - z[i];
        if (s < 0 || s % 2 != 0) return std::nullopt;
        e[i] = s / 2;
    }
    return DimVector(e);
}

}  // namespace

void for_each_three_cycle(const HallTables& tables, int a, int b, int m,
                          const std::function<void(const ThreeCycle&)>& visit) {
    const Catalog& cat = tables.catalog();
    const DimVector da = cat.dim(a), db = cat.dim(b), dm = cat.dim(m);
    auto di = pinned_dim(da, db, dm);  // 2I = A + B - M
    auto dl = pinned_dim(dm, db, da);  // 2L = M + B - A
    auto dn = pinned_dim(dm, da, db);  // 2N = M + A - B
    if (!di || !dl || !dn) return;

    for (int l : cat.classes_with_dim(*dl)) {
        for (int i : cat.classes_with_dim(*di)) {
            const Integer& f_b = tables.hall_number(l, i, b);
            if (f_b == 0) continue;
            for (int n : cat.classes_with_dim(*dn)) {
                const Integer& f_m = tables.hall_number(n, l, m);
                if (f_m == 0) continue;
                const Integer& f_a = tables.hall_number(i, n, a);
                if (f_a == 0) continue;
                visit(ThreeCycle{l, i, n, f_b, f_m, f_a});
            }
        }
    }
}

QuadNumber delta_hall_number(const HallTables& tables, int a, int b, int m) {
    const Catalog& cat = tables.catalog();
    QuadNumber sum;
    for_each_three_cycle(tables, a, b, m, [&](const ThreeCycle& c) {
        long long e = lin_bracket(cat.quiver(), cat.dim(c.l), cat.dim(c.i),
                                  cat.dim(c.n));
        Rational w(tables.aut(c.l) * tables.aut(c.i) * tables.aut(c.n),
                   tables.aut(m));
        w.canonicalize();
        w *= Rational(c.f_b * c.f_m * c.f_a);
        sum += w * vpow(cat.q(), e);
    });
    return sum;
}

QuadNumber derived_hall_number(const HallTables& tables, int a, int b, int m) {
    const Catalog& cat = tables.catalog();
    QuadNumber sum;
    for_each_three_cycle(tables, a, b, m, [&](const ThreeCycle& c) {
        long long e = lin_bracket(cat.quiver(), cat.dim(c.l), cat.dim(c.i),
                                  cat.dim(c.n));
        Rational w(tables.aut(c.l) * tables.aut(c.i) * tables.aut(c.n),
                   tables.aut(a) * tables.aut(b));
        w.canonicalize();
        w *= Rational(c.f_b * c.f_m * c.f_a);
        sum += w * vpow(cat.q(), e);
    });
    return sum;
}

Integer derived_aut(const HallTables& tables, int m) {
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(tables.q()),
                  static_cast<unsigned long>(tables.ext_dim(m, m)));
    return tables.aut(m) * e;
}

namespace {

void check_pair_bound(const HallTables& t, int a, int b) {
    const Catalog& cat = t.catalog();
    if (cat.total_dim(a) + cat.total_dim(b) > cat.max_total_dim())
        throw truncation_error(
            "product needs classes of total dimension " +
            std::to_string(cat.total_dim(a) + cat.total_dim(b)) +
            ", beyond the catalog bound " +
            std::to_string(cat.max_total_dim()));
}

DeltaElement bilinear_product(
    const DeltaElement& x, const DeltaElement& y, const HallTables& tables,
    QuadNumber (*structure)(const HallTables&, int, int, int)) {
    const Catalog& cat = tables.catalog();
    DeltaElement out;
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            check_pair_bound(tables, a, b);
            QuadNumber pair = ca * cb;
            // support: M = A + B - 2I componentwise, 0 <= I <= min(A, B)
            for (int m = 0; m < cat.size(); ++m) {
                QuadNumber f = structure(tables, a, b, m);
                if (f.is_zero()) continue;
                out.add_term(m, pair * f);
            }
        }
    }
    return out;
}

}  // namespace

DeltaElement delta_product(const DeltaElement& x, const DeltaElement& y,
                           const HallTables& tables) {
    return bilinear_product(x, y, tables, delta_hall_number);
}

DeltaElement derived_product(const DeltaElement& x, const DeltaElement& y,
                             const HallTables& tables) {
    return bilinear_product(x, y, tables, derived_hall_number);
}

DeltaElement xi_map(const HallTables& tables, int m) {
    DeltaElement e;
    Rational c(1, tables.aut(m));
    c.canonicalize();
    e.add_term(m, QuadNumber(tables.q(), c, Rational(0)));
    return e;
}

DeltaElement xi_image(const HallTables& tables, const DeltaElement& derived) {
    DeltaElement out;
    for (const auto& [m, c] : derived.terms()) {
        Rational scale(1, tables.aut(m));
        scale.canonicalize();
        out.add_term(m, scale * c);
    }
    return out;
}

DeltaElement theta_generator(const HallTables& tables, int vertex) {
    const Catalog& cat = tables.catalog();
    int s = cat.simple_ids().at(vertex);
    Rational scale(1, tables.aut(s));
    scale.canonicalize();
    QuadNumber c = scale * (-vpow(cat.q(), -1));
    DeltaElement e;
    e.add_term(s, c);
    return e;
}

}  // namespace deltahall
