#include "deltahall/hall.hpp"

#include "deltahall/errors.hpp"

namespace deltahall {

HallElement HallElement::basis(int class_id) {
    HallElement e;
    e.terms_[class_id] = 1;
    return e;
}

Rational HallElement::coeff(int class_id) const {
    auto it = terms_.find(class_id);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HallElement::add_term(int class_id, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(class_id, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HallElement operator+(const HallElement& x, const HallElement& y) {
    HallElement r = x;
    for (const auto& [id, c] : y.terms_) r.add_term(id, c);
    return r;
}

HallElement operator-(const HallElement& x, const HallElement& y) {
    HallElement r = x;
    for (const auto& [id, c] : y.terms_) r.add_term(id, -c);
    return r;
}

HallElement operator*(const Rational& c, const HallElement& x) {
    HallElement r;
    if (c == 0) return r;
    for (const auto& [id, v] : x.terms_) r.terms_[id] = c * v;
    return r;
}

namespace {

void check_product_bound(const HallTables& t, int a, int b) {
    const Catalog& cat = t.catalog();
    if (cat.total_dim(a) + cat.total_dim(b) > cat.max_total_dim())
        throw truncation_error(
            "product needs classes of total dimension " +
            std::to_string(cat.total_dim(a) + cat.total_dim(b)) +
            ", beyond the catalog bound " +
            std::to_string(cat.max_total_dim()));
}

}  // namespace

HallElement hall_product(const HallElement& x, const HallElement& y,
                         const HallTables& tables) {
    const Catalog& cat = tables.catalog();
    HallElement out;
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            check_product_bound(tables, a, b);
            Rational pair_coeff = ca * cb;
            Rational hom_count =
                rational_qpow(cat.q(), tables.hom_dim(a, b));
            const DimVector target = cat.dim(a) + cat.dim(b);
            for (int m : cat.classes_with_dim(target)) {
                Integer ext = tables.ext_count(a, b, m);
                if (ext == 0) continue;
                out.add_term(m, pair_coeff * Rational(ext) / hom_count);
            }
        }
    }
    return out;
}

std::pair<Rational, Rational> assoc3(int a, int b, int c, int m,
                                     const HallTables& tables) {
    const Catalog& cat = tables.catalog();
    check_product_bound(tables, a, b);
    check_product_bound(tables, b, c);

    Rational lhs(0), rhs(0);
    for (int x : cat.classes_with_dim(cat.dim(a) + cat.dim(b))) {
        const Integer& f1 = tables.hall_number(a, b, x);
        if (f1 == 0) continue;
        lhs += Rational(f1) * Rational(tables.hall_number(x, c, m));
    }
    for (int y : cat.classes_with_dim(cat.dim(b) + cat.dim(c))) {
        const Integer& f1 = tables.hall_number(b, c, y);
        if (f1 == 0) continue;
        rhs += Rational(f1) * Rational(tables.hall_number(a, y, m));
    }
    return {lhs, rhs};
}

std::pair<Rational, Rational> green_check(int m, int n, int x, int y,
                                          const HallTables& tables) {
    const Catalog& cat = tables.catalog();
    const DimVector dm = cat.dim(m), dn = cat.dim(n), dx = cat.dim(x),
                    dy = cat.dim(y);
    if (!(dm + dn == dx + dy)) return {Rational(0), Rational(0)};
    if (dm.total() + dn.total() > cat.max_total_dim())
        throw truncation_error(
            "green_check: middle-term sum needs total dimension " +
            std::to_string(dm.total() + dn.total()) + " > bound " +
            std::to_string(cat.max_total_dim()));

    Rational lhs(0);
    for (int e : cat.classes_with_dim(dm + dn)) {
        const Integer& f1 = tables.hall_number(m, n, e);
        if (f1 == 0) continue;
        const Integer& f2 = tables.hall_number(x, y, e);
        if (f2 == 0) continue;
        lhs += Rational(f1) * Rational(f2) / Rational(tables.aut(e));
    }

    // quadruples graded by dimension: A+B = M, C+D = N, A+C = X, B+D = Y
    Rational rhs(0);
    const int nv = cat.quiver().vertex_count();
    for (int a = 0; a < cat.size(); ++a) {
        const DimVector& da = cat.dim(a);
        if (!dm.dominates(da) || !dx.dominates(da)) continue;
        std::vector<int> db_e(nv), dc_e(nv), dd_e(nv);
        bool ok = true;
        for (int i = 0; i < nv; ++i) {
            db_e[i] = dm[i] - da[i];
            dc_e[i] = dx[i] - da[i];
            dd_e[i] = dn[i] - dc_e[i];
            if (dd_e[i] < 0) ok = false;
        }
        if (!ok) continue;
        DimVector db(db_e), dc(dc_e), dd(dd_e);
        if (!(db + dd == dy)) continue;

        for (int b : cat.classes_with_dim(db)) {
            const Integer& fm = tables.hall_number(a, b, m);
            if (fm == 0) continue;
            for (int c : cat.classes_with_dim(dc)) {
                const Integer& fx = tables.hall_number(a, c, x);
                if (fx == 0) continue;
                for (int d : cat.classes_with_dim(dd)) {
                    const Integer& fn = tables.hall_number(c, d, n);
                    if (fn == 0) continue;
                    const Integer& fy = tables.hall_number(b, d, y);
                    if (fy == 0) continue;
                    Rational term = rational_qpow(
                        cat.q(), -euler_form(cat.quiver(), da, dd));
                    term *= Rational(fm) * Rational(fn) * Rational(fx) *
                            Rational(fy);
                    term *= Rational(tables.aut(a)) * Rational(tables.aut(b)) *
                            Rational(tables.aut(c)) * Rational(tables.aut(d));
                    term /= Rational(tables.aut(m)) * Rational(tables.aut(n)) *
                            Rational(tables.aut(x)) * Rational(tables.aut(y));
                    rhs += term;
                }
            }
        }
    }
    return {lhs, rhs};
}

}  // namespace deltahall
