#include "deltahall/extended.hpp"

#include "deltahall/errors.hpp"

namespace deltahall {

ExtElement ExtElement::basis(const ExtLabel& label, long q) {
    ExtElement e;
    e.terms_[label] = QuadNumber::from_int(q, 1);
    return e;
}

ExtElement ExtElement::basis(int class_id, const K0Class& kappa, long q) {
    return basis(ExtLabel{class_id, HalfK0Class::of(kappa)}, q);
}

QuadNumber ExtElement::coeff(const ExtLabel& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? QuadNumber() : it->second;
}

void ExtElement::add_term(const ExtLabel& label, const QuadNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExtElement operator+(const ExtElement& x, const ExtElement& y) {
    ExtElement r = x;
    for (const auto& [l, c] : y.terms_) r.add_term(l, c);
    return r;
}

ExtElement operator-(const ExtElement& x, const ExtElement& y) {
    ExtElement r = x;
    for (const auto& [l, c] : y.terms_) r.add_term(l, -c);
    return r;
}

ExtElement operator*(const QuadNumber& c, const ExtElement& x) {
    ExtElement r;
    if (c.is_zero()) return r;
    for (const auto& [l, v] : x.terms_) r.terms_[l] = c * v;
    return r;
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

// Doubled K-shift for the term [M] of [A]*[B]: A + B - M, guaranteed even
// by the three-cycle parity whenever the structure constant is nonzero.
HalfK0Class shift_kappa(const Catalog& cat, int a, int b, int m,
                        const HalfK0Class& ka, const HalfK0Class& kb) {
    const DimVector &da = cat.dim(a), &db = cat.dim(b), &dm = cat.dim(m);
    std::vector<long long> d(da.size());
    for (int i = 0; i < da.size(); ++i)
        d[i] = static_cast<long long>(da[i]) + db[i] - dm[i];
    return HalfK0Class(std::move(d)) + ka + kb;
}

enum class Shift { k_shift, none };

ExtElement graded_product(
    const ExtElement& x, const ExtElement& y, const HallTables& tables,
    QuadNumber (*structure)(const HallTables&, int, int, int), Shift shift) {
    const Catalog& cat = tables.catalog();
    ExtElement out;
    for (const auto& [la, ca] : x.terms()) {
        for (const auto& [lb, cb] : y.terms()) {
            check_pair_bound(tables, la.class_id, lb.class_id);
            QuadNumber pair = ca * cb;
            for (int m = 0; m < cat.size(); ++m) {
                QuadNumber f = structure(tables, la.class_id, lb.class_id, m);
                if (f.is_zero()) continue;
                HalfK0Class kappa =
                    shift == Shift::k_shift
                        ? shift_kappa(cat, la.class_id, lb.class_id, m,
                                      la.kappa, lb.kappa)
                        : la.kappa + lb.kappa;
                out.add_term(ExtLabel{m, std::move(kappa)}, pair * f);
            }
        }
    }
    return out;
}

}  // namespace

ExtElement ext_product(const ExtElement& x, const ExtElement& y,
                       const HallTables& tables) {
    return graded_product(x, y, tables, delta_hall_number, Shift::k_shift);
}

ExtElement tensor_product(const ExtElement& x, const ExtElement& y,
                          const HallTables& tables) {
    return graded_product(x, y, tables, delta_hall_number, Shift::none);
}

ExtElement tensor_derived_product(const ExtElement& x, const ExtElement& y,
                                  const HallTables& tables) {
    return graded_product(x, y, tables, derived_hall_number, Shift::none);
}

TwistForm::TwistForm(std::vector<std::vector<long long>> t) : t_(std::move(t)) {
    for (const auto& row : t_)
        if (row.size() != t_.size())
            throw config_error("twist matrix must be square");
}

TwistForm TwistForm::zero(int n) {
    return TwistForm(
        std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
}

TwistForm TwistForm::semi_derived(const Quiver& quiver) {
    int n = quiver.vertex_count();
    std::vector<std::vector<long long>> t(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = -euler_form(quiver, K0Class::unit(n, i),
                                  K0Class::unit(n, j));
    return TwistForm(std::move(t));
}

long long TwistForm::exponent(const K0Class& x, const K0Class& y) const {
    if (x.size() != size() || y.size() != size())
        throw std::invalid_argument("twist form: length mismatch");
    long long e = 0;
    for (int i = 0; i < size(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < size(); ++j) e += x[i] * t_[i][j] * y[j];
    }
    return e;
}

ExtElement twisted_product(const ExtElement& x, const ExtElement& y,
                           const TwistForm& phi, const HallTables& tables) {
    const Catalog& cat = tables.catalog();
    ExtElement out;
    for (const auto& [la, ca] : x.terms()) {
        // deg = M + 2 kappa is integral even for half labels
        K0Class degx = ext_degree(cat, la);
        ExtElement xa;
        xa.add_term(la, ca);
        for (const auto& [lb, cb] : y.terms()) {
            K0Class degy = ext_degree(cat, lb);
            ExtElement yb;
            yb.add_term(lb, cb);
            QuadNumber scale = vpow(cat.q(), phi.exponent(degx, degy));
            out = out + scale * ext_product(xa, yb, tables);
        }
    }
    return out;
}

bool central_check(const HallTables& tables, const K0Class& alpha,
                   const ExtProductFn& product) {
    const Catalog& cat = tables.catalog();
    int nv = cat.quiver().vertex_count();
    ExtElement k = ExtElement::basis(0, alpha, cat.q());

    std::vector<K0Class> betas{K0Class::zero(nv), alpha};
    for (int i = 0; i < nv; ++i) betas.push_back(K0Class::unit(nv, i));

    for (int m = 0; m < cat.size(); ++m) {
        for (const K0Class& beta : betas) {
            ExtElement x = ExtElement::basis(m, beta, cat.q());
            if (!(product(k, x, tables) == product(x, k, tables))) return false;
        }
    }
    return true;
}

DeltaElement reduce_phi(const ExtElement& x) {
    DeltaElement out;
    for (const auto& [l, c] : x.terms()) {
        if (!l.kappa.is_integral())
            throw std::invalid_argument(
                "reduce_phi: half-integral K label has no image");
        out.add_term(l.class_id, c);
    }
    return out;
}

ExtElement xi_tilde(const HallTables& tables, int m, const K0Class& alpha) {
    ExtElement e;
    long long mm = tables.euler(m, m);
    e.add_term(ExtLabel{m, HalfK0Class::of(alpha)},
               vpow(tables.q(), -mm));
    return e;
}

ExtElement xi_tilde_image(const HallTables& tables, const ExtElement& x) {
    ExtElement out;
    for (const auto& [l, c] : x.terms()) {
        long long mm = tables.euler(l.class_id, l.class_id);
        out.add_term(l, c * vpow(tables.q(), -mm));
    }
    return out;
}

QuadNumber ihall_number(const HallTables& tables, int a, int b, int m) {
    const Catalog& cat = tables.catalog();
    long long eab = tables.euler(a, b);
    QuadNumber sum;
    for_each_three_cycle(tables, a, b, m, [&](const ThreeCycle& c) {
        long long enl = euler_form(cat.quiver(), cat.dim(c.n), cat.dim(c.l));
        Rational w(tables.aut(c.l) * tables.aut(c.i) * tables.aut(c.n),
                   tables.aut(m));
        w.canonicalize();
        w *= Rational(c.f_b * c.f_m * c.f_a);
        sum += w * vpow(cat.q(), -eab + 2 * enl);
    });
    return sum;
}

ExtElement ihall_product(const ExtElement& x, const ExtElement& y,
                         const HallTables& tables) {
    return graded_product(x, y, tables, ihall_number, Shift::k_shift);
}

ExtElement sdh_product(const ExtElement& x, const ExtElement& y,
                       const HallTables& tables) {
    const Catalog& cat = tables.catalog();
    const Quiver& quiver = cat.quiver();
    ExtElement out;
    for (const auto& [la, ca] : x.terms()) {
        K0Class degx = ext_degree(cat, la);
        ExtElement xa;
        xa.add_term(la, ca);
        for (const auto& [lb, cb] : y.terms()) {
            K0Class degy = ext_degree(cat, lb);
            ExtElement yb;
            yb.add_term(lb, cb);
            QuadNumber scale =
                vpow(cat.q(), -euler_form(quiver, degx, degy));
            out = out + scale * ihall_product(xa, yb, tables);
        }
    }
    return out;
}

ExtElement phi_tensor(const HallTables& tables, const ExtElement& x) {
    const Catalog& cat = tables.catalog();
    ExtElement out;
    for (const auto& [l, c] : x.terms()) {
        // kappa + M/2, doubled: kappa_d + dim(M)
        std::vector<long long> d = l.kappa.doubled();
        const DimVector& dm = cat.dim(l.class_id);
        for (int i = 0; i < dm.size(); ++i) d[i] += dm[i];
        out.add_term(ExtLabel{l.class_id, HalfK0Class(std::move(d))}, c);
    }
    return out;
}

ExtElement phi_tensor_inverse(const HallTables& tables, const ExtElement& x) {
    const Catalog& cat = tables.catalog();
    ExtElement out;
    for (const auto& [l, c] : x.terms()) {
        std::vector<long long> d = l.kappa.doubled();
        const DimVector& dm = cat.dim(l.class_id);
        for (int i = 0; i < dm.size(); ++i) d[i] -= dm[i];
        out.add_term(ExtLabel{l.class_id, HalfK0Class(std::move(d))}, c);
    }
    return out;
}

ExtElement psi_tensor(const HallTables& tables, const ExtElement& x) {
    ExtElement shifted = phi_tensor(tables, x);
    ExtElement out;
    for (const auto& [l, c] : shifted.terms()) {
        Rational am(tables.aut(l.class_id));
        out.add_term(l, am * c);
    }
    return out;
}

ExtElement psi_tensor_inverse(const HallTables& tables, const ExtElement& x) {
    ExtElement scaled;
    for (const auto& [l, c] : x.terms()) {
        Rational inv_am(1, tables.aut(l.class_id));
        inv_am.canonicalize();
        scaled.add_term(l, inv_am * c);
    }
    return phi_tensor_inverse(tables, scaled);
}

K0Class ext_degree(const Catalog& catalog, const ExtLabel& label) {
    const DimVector& dm = catalog.dim(label.class_id);
    std::vector<long long> e(label.kappa.doubled());
    for (int i = 0; i < dm.size(); ++i) e[i] += dm[i];
    return K0Class(std::move(e));
}

}  // namespace deltahall
