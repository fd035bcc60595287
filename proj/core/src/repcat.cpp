#include "deltahall/repcat.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "deltahall/errors.hpp"
#include "deltahall/quad.hpp"

namespace deltahall {

void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                body(i);
        });
    for (auto& t : pool) t.join();
}

namespace {

std::string dim_to_string(const DimVector& d) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

// q^e compared against a cap without overflow; returns min(q^e, cap+1).
long long pow_capped(long q, long long e, long long cap) {
    long long v = 1;
    for (long long i = 0; i < e; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

// Coefficient matrix of the intertwiner equations f_t R_a = S_a f_s.
// Unknowns: entries of f_i (shape s.dim[i] x r.dim[i]), vertex by vertex,
// row-major.
FpMatrix hom_system(const Quiver& quiver, const Representation& r,
                    const Representation& s, int* unknowns_out) {
    if (r.p != s.p)
        throw std::invalid_argument("representations over different primes");
    int p = r.p;

    int nv = quiver.vertex_count();
    std::vector<int> offset(nv + 1, 0);
    for (int i = 0; i < nv; ++i)
        offset[i + 1] = offset[i] + s.dim[i] * r.dim[i];
    int unknowns = offset[nv];
    if (unknowns_out) *unknowns_out = unknowns;

    int rows = 0;
    for (size_t a = 0; a < quiver.arrows().size(); ++a) {
        const Arrow& ar = quiver.arrows()[a];
        rows += s.dim[ar.target] * r.dim[ar.source];
    }

    FpMatrix sys(p, rows, unknowns);
    int row = 0;
    for (size_t a = 0; a < quiver.arrows().size(); ++a) {
        const Arrow& ar = quiver.arrows()[a];
        const FpMatrix& ra = r.maps[a];  // r.dim[target] x r.dim[source]
        const FpMatrix& sa = s.maps[a];
        int u = ar.source, w = ar.target;
        // equation (alpha, beta): sum_g f_w[alpha,g] ra[g,beta]
        //                       - sum_d sa[alpha,d] f_u[d,beta] = 0
        for (int alpha = 0; alpha < s.dim[w]; ++alpha) {
            for (int beta = 0; beta < r.dim[u]; ++beta) {
                for (int g = 0; g < r.dim[w]; ++g) {
                    int col = offset[w] + alpha * r.dim[w] + g;
                    sys.set(row, col, sys.at(row, col) + ra.at(g, beta));
                }
                for (int d = 0; d < s.dim[u]; ++d) {
                    int col = offset[u] + d * r.dim[u] + beta;
                    sys.set(row, col, sys.at(row, col) - sa.at(alpha, d));
                }
                ++row;
            }
        }
    }
    return sys;
}

std::vector<FpMatrix> unpack_hom_vector(const Quiver& quiver,
                                        const Representation& r,
                                        const Representation& s, int p,
                                        const std::vector<int>& v) {
    int nv = quiver.vertex_count();
    std::vector<FpMatrix> f;
    f.reserve(nv);
    int pos = 0;
    for (int i = 0; i < nv; ++i) {
        FpMatrix fi(p, s.dim[i], r.dim[i]);
        for (int a = 0; a < s.dim[i]; ++a)
            for (int b = 0; b < r.dim[i]; ++b) fi.set(a, b, v[pos++]);
        f.push_back(std::move(fi));
    }
    return f;
}

}  // namespace

int hom_dim(const Quiver& quiver, const Representation& r,
            const Representation& s) {
    int unknowns = 0;
    FpMatrix sys = hom_system(quiver, r, s, &unknowns);
    return unknowns - sys.rank();
}

std::vector<std::vector<FpMatrix>> hom_basis(const Quiver& quiver,
                                             const Representation& r,
                                             const Representation& s) {
    int unknowns = 0;
    FpMatrix sys = hom_system(quiver, r, s, &unknowns);
    std::vector<std::vector<FpMatrix>> basis;
    for (const std::vector<int>& v : sys.kernel_basis())
        basis.push_back(unpack_hom_vector(quiver, r, s, sys.p(), v));
    return basis;
}

namespace {

// Enumerate all F_p-combinations of the hom basis; visit returns true to
// stop early. Returns true when stopped.
bool scan_hom_points(int p, const std::vector<std::vector<FpMatrix>>& basis,
                     int nv,
                     const std::function<bool(const std::vector<FpMatrix>&)>&
                         visit) {
    size_t h = basis.size();
    std::vector<int> c(h, 0);
    std::vector<FpMatrix> f;
    while (true) {
        f.clear();
        for (int i = 0; i < nv; ++i) {
            FpMatrix fi = h ? FpMatrix(p, basis[0][i].rows(), basis[0][i].cols())
                            : FpMatrix(p, 0, 0);
            for (size_t j = 0; j < h; ++j) {
                if (c[j] == 0) continue;
                for (int rr = 0; rr < fi.rows(); ++rr)
                    for (int cc = 0; cc < fi.cols(); ++cc)
                        fi.set(rr, cc,
                               fi.at(rr, cc) + c[j] * basis[j][i].at(rr, cc));
            }
            f.push_back(std::move(fi));
        }
        if (visit(f)) return true;
        size_t t = 0;
        while (t < h && ++c[t] == p) c[t++] = 0;
        if (t == h) break;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Quiver& quiver, const Representation& r,
                   const Representation& s, const EnumerationCaps& caps) {
    if (r.dim != s.dim) return false;
    if (r.total_dim() == 0) return true;
    int p = r.p;

    // iso forces hom(r,s) = end(r) = end(s); cheap rank-only prefilter
    int hrs = hom_dim(quiver, r, s);
    if (hrs == 0) return false;
    if (hom_dim(quiver, r, r) != hrs || hom_dim(quiver, s, s) != hrs)
        return false;

    if (pow_capped(p, hrs, caps.hom_points) > caps.hom_points)
        throw cap_exceeded("hom-point enumeration over cap: " +
                           std::to_string(p) + "^" + std::to_string(hrs));

    auto basis = hom_basis(quiver, r, s);
    int nv = quiver.vertex_count();
    return scan_hom_points(p, basis, nv,
                           [&](const std::vector<FpMatrix>& f) {
                               for (const FpMatrix& fi : f)
                                   if (!fi.is_invertible()) return false;
                               return true;
                           });
}

Integer aut_order(const Quiver& quiver, const Representation& r,
                  const EnumerationCaps& caps) {
    if (r.total_dim() == 0) return 1;
    int p = r.p;
    int ed = hom_dim(quiver, r, r);
    if (pow_capped(p, ed, caps.hom_points) > caps.hom_points)
        throw cap_exceeded("endomorphism enumeration over cap: " +
                           std::to_string(p) + "^" + std::to_string(ed));
    auto basis = hom_basis(quiver, r, r);
    int nv = quiver.vertex_count();
    Integer count = 0;
    scan_hom_points(p, basis, nv, [&](const std::vector<FpMatrix>& f) {
        for (const FpMatrix& fi : f)
            if (!fi.is_invertible()) return false;
        ++count;
        return false;
    });
    return count;
}

bool is_nilpotent(const Quiver& quiver, const Representation& r) {
    if (!quiver.has_oriented_cycle()) return true;
    int n = r.total_dim();
    if (n == 0) return true;
    int p = r.p;
    std::vector<int> offset(quiver.vertex_count() + 1, 0);
    for (int i = 0; i < quiver.vertex_count(); ++i)
        offset[i + 1] = offset[i] + r.dim[i];
    FpMatrix t(p, n, n);
    for (size_t a = 0; a < quiver.arrows().size(); ++a) {
        const Arrow& ar = quiver.arrows()[a];
        const FpMatrix& m = r.maps[a];
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                t.set(offset[ar.target] + i, offset[ar.source] + j,
                      t.at(offset[ar.target] + i, offset[ar.source] + j) +
                          m.at(i, j));
    }
    FpMatrix power = t;
    for (int i = 1; i < n; ++i) power = power.mul(t);
    return power.is_zero();
}

void for_each_subrep(const Quiver& quiver, const Representation& ambient,
                     const DimVector& sub_dim,
                     const std::function<void(const Subrep&)>& visit,
                     const EnumerationCaps& caps) {
    int nv = quiver.vertex_count();
    if (!ambient.dim.dominates(sub_dim)) return;
    int p = ambient.p;

    long long tuples = 1;
    for (int i = 0; i < nv; ++i) {
        tuples *= subspace_count(p, ambient.dim[i], sub_dim[i]);
        if (tuples > caps.subspace_tuples)
            throw cap_exceeded("subspace-tuple enumeration over cap at dim " +
                               dim_to_string(ambient.dim));
    }

    // materialize per-vertex subspace lists, then walk the product
    std::vector<std::vector<FpMatrix>> spaces(nv);
    for (int i = 0; i < nv; ++i)
        for_each_subspace(p, ambient.dim[i], sub_dim[i],
                          [&](const FpMatrix& b) { spaces[i].push_back(b); });

    std::vector<size_t> pick(nv, 0);
    while (true) {
        // invariance: every arrow maps the source subspace into the target one
        bool invariant = true;
        for (size_t a = 0; a < quiver.arrows().size() && invariant; ++a) {
            const Arrow& ar = quiver.arrows()[a];
            const FpMatrix& basis_u = spaces[ar.source][pick[ar.source]];
            const FpMatrix& basis_w = spaces[ar.target][pick[ar.target]];
            const FpMatrix& m = ambient.maps[a];
            for (int rrow = 0; rrow < basis_u.rows() && invariant; ++rrow) {
                std::vector<int> img(ambient.dim[ar.target], 0);
                for (int i = 0; i < m.rows(); ++i) {
                    long long acc = 0;
                    for (int j = 0; j < m.cols(); ++j)
                        acc += static_cast<long long>(m.at(i, j)) *
                               basis_u.at(rrow, j);
                    img[i] = static_cast<int>(acc % p);
                }
                if (!FpMatrix::row_space_coords(basis_w, img, nullptr))
                    invariant = false;
            }
        }

        if (invariant) {
            Subrep sr;
            sr.sub.p = p;
            sr.quotient.p = p;
            sr.sub.dim = sub_dim;
            std::vector<int> quot_entries(nv);
            for (int i = 0; i < nv; ++i)
                quot_entries[i] = ambient.dim[i] - sub_dim[i];
            sr.quotient.dim = DimVector(quot_entries);

            // full change of basis per vertex: subspace rows first, then the
            // standard vectors at non-pivot columns
            std::vector<FpMatrix> full(nv), inv_t(nv);
            for (int i = 0; i < nv; ++i) {
                int n = ambient.dim[i], k = sub_dim[i];
                const FpMatrix& b = spaces[i][pick[i]];
                FpMatrix f(p, n, n);
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < n; ++c) f.set(r, c, b.at(r, c));
                // pivot columns of the echelon basis
                std::vector<bool> is_pivot(n, false);
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < n; ++c)
                        if (b.at(r, c) != 0) {
                            is_pivot[c] = true;
                            break;
                        }
                int row = k;
                for (int c = 0; c < n; ++c)
                    if (!is_pivot[c]) f.set(row++, c, 1);
                full[i] = f;
                // transpose, then invert: coords(x) = (P^T)^{-1} x
                FpMatrix ft(p, n, n);
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) ft.set(r, c, f.at(c, r));
                inv_t[i] = ft.inverse();
            }

            sr.bases.resize(nv);
            for (int i = 0; i < nv; ++i) sr.bases[i] = spaces[i][pick[i]];

            for (size_t a = 0; a < quiver.arrows().size(); ++a) {
                const Arrow& ar = quiver.arrows()[a];
                int ku = sub_dim[ar.source], kw = sub_dim[ar.target];
                int nu = ambient.dim[ar.source], nw = ambient.dim[ar.target];
                // T = (P_w^T)^{-1} M P_u^T; sub block [0:kw, 0:ku],
                // quotient block [kw:, ku:]
                FpMatrix put(p, nu, nu);
                for (int r = 0; r < nu; ++r)
                    for (int c = 0; c < nu; ++c)
                        put.set(r, c, full[ar.source].at(c, r));
                FpMatrix t = inv_t[ar.target].mul(ambient.maps[a]).mul(put);
                FpMatrix sm(p, kw, ku), qm(p, nw - kw, nu - ku);
                for (int r = 0; r < kw; ++r)
                    for (int c = 0; c < ku; ++c) sm.set(r, c, t.at(r, c));
                for (int r = 0; r < nw - kw; ++r)
                    for (int c = 0; c < nu - ku; ++c)
                        qm.set(r, c, t.at(kw + r, ku + c));
                sr.sub.maps.push_back(std::move(sm));
                sr.quotient.maps.push_back(std::move(qm));
            }
            visit(sr);
        }

        int t = 0;
        while (t < nv && ++pick[t] == spaces[t].size()) pick[t++] = 0;
        if (t == nv) break;
    }
}

const std::vector<int> Catalog::no_classes_{};

Catalog Catalog::enumerate(const Quiver& quiver, long q, int max_total_dim,
                           EnumerationCaps caps) {
    if (!is_prime(q))
        throw config_error("ground field size q must be prime, got " +
                           std::to_string(q));
    if (max_total_dim < 0) throw config_error("max total dimension < 0");

    Catalog cat(quiver, q, max_total_dim, caps);
    int nv = quiver.vertex_count();
    int p = static_cast<int>(q);
    bool need_nilpotency = quiver.has_oriented_cycle();

    // dimension vectors of each total, lexicographically
    std::vector<DimVector> dims;
    for (int total = 0; total <= max_total_dim; ++total) {
        std::vector<int> cur(nv, 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == nv - 1) {
                cur[pos] = left;
                dims.push_back(DimVector(cur));
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, total);
    }

    for (const DimVector& d : dims) {
        // shapes and total entry count for this dimension vector
        std::vector<std::pair<int, int>> shapes;
        long long entries = 0;
        for (const Arrow& a : quiver.arrows()) {
            shapes.emplace_back(d[a.target], d[a.source]);
            entries += static_cast<long long>(d[a.target]) * d[a.source];
        }
        if (pow_capped(q, entries, caps.matrix_tuples) > caps.matrix_tuples)
            throw cap_exceeded("matrix-tuple enumeration over cap at dim " +
                               dim_to_string(d));

        std::vector<int> digits(entries, 0);
        std::vector<int>& ids = cat.by_dim_[d];
        while (true) {
            Representation rep;
            rep.p = p;
            rep.dim = d;
            size_t pos = 0;
            for (size_t a = 0; a < shapes.size(); ++a) {
                FpMatrix m(p, shapes[a].first, shapes[a].second);
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) m.set(r, c, digits[pos++]);
                rep.maps.push_back(std::move(m));
            }

            if (!need_nilpotency || is_nilpotent(quiver, rep)) {
                bool known = false;
                for (int id : ids)
                    if (is_isomorphic(quiver, cat.classes_[id], rep, caps)) {
                        known = true;
                        break;
                    }
                if (!known) {
                    cat.classes_.push_back(rep);
                    ids.push_back(static_cast<int>(cat.classes_.size()) - 1);
                }
            }

            // ascending lexicographic order over the concatenated entries
            size_t t = digits.size();
            bool wrapped = true;
            while (t > 0) {
                if (++digits[t - 1] < p) {
                    wrapped = false;
                    break;
                }
                digits[t - 1] = 0;
                --t;
            }
            if (wrapped) break;
        }
    }
    return cat;
}

const std::vector<int>& Catalog::classes_with_dim(const DimVector& d) const {
    auto it = by_dim_.find(d);
    return it == by_dim_.end() ? no_classes_ : it->second;
}

int Catalog::classify(const Representation& r) const {
    if (r.total_dim() > max_total_dim_)
        throw truncation_error("classify: total dimension " +
                               std::to_string(r.total_dim()) +
                               " exceeds catalog bound " +
                               std::to_string(max_total_dim_));
    for (int id : classes_with_dim(r.dim))
        if (is_isomorphic(quiver_, classes_[id], r, caps_)) return id;
    throw std::logic_error("classify: representation missing from catalog");
}

std::vector<int> Catalog::simple_ids() const {
    std::vector<int> ids;
    for (int i = 0; i < quiver_.vertex_count(); ++i) {
        const auto& c = classes_with_dim(DimVector::unit(quiver_.vertex_count(), i));
        if (c.size() != 1)
            throw std::logic_error("expected exactly one simple per vertex");
        ids.push_back(c[0]);
    }
    return ids;
}

HallTables::HallTables(const Catalog& catalog, int jobs)
    : catalog_(&catalog), n_(catalog.size()) {
    hom_.assign(static_cast<size_t>(n_) * n_, 0);
    aut_.assign(n_, Integer(0));
    hall_.assign(static_cast<size_t>(n_) * n_ * n_, Integer(0));

    const Quiver& qv = catalog.quiver();

    parallel_for(static_cast<size_t>(n_) * n_, jobs, [&](size_t i) {
        int r = static_cast<int>(i) / n_, s = static_cast<int>(i) % n_;
        hom_[i] = deltahall::hom_dim(qv, catalog.rep(r), catalog.rep(s));
    });

    parallel_for(n_, jobs, [&](size_t m) {
        aut_[m] = deltahall::aut_order(qv, catalog.rep(static_cast<int>(m)),
                                       catalog.caps());
    });

    // one subrepresentation sweep per (ambient, sub-dimension) fills every
    // F^m_{a,b} with that ambient
    parallel_for(n_, jobs, [&](size_t mi) {
        int m = static_cast<int>(mi);
        const Representation& ambient = catalog.rep(m);
        int nv = qv.vertex_count();
        std::vector<int> cur(nv, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == nv) {
                DimVector sub_dim(cur);
                for_each_subrep(
                    qv, ambient, sub_dim,
                    [&](const Subrep& sr) {
                        int b = catalog.classify(sr.sub);
                        int a = catalog.classify(sr.quotient);
                        hall_[idx3(a, b, m)] += 1;
                    },
                    catalog.caps());
                return;
            }
            for (int v = 0; v <= ambient.dim[pos]; ++v) {
                cur[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    });
}

int HallTables::ext_dim(int r, int s) const {
    int e = hom_dim(r, s) - static_cast<int>(euler(r, s));
    if (e < 0)
        throw std::logic_error("negative Ext dimension: hereditarity violated");
    return e;
}

Integer HallTables::ext_count(int a, int b, int m) const {
    const Integer& f = hall_number(a, b, m);
    if (f == 0) return 0;
    Integer num = f;
    Integer qpow;
    mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(catalog_->q()),
                  static_cast<unsigned long>(hom_dim(a, b)));
    num *= qpow;
    num *= aut_[a];
    num *= aut_[b];
    Integer r, quo;
    mpz_tdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                aut_[m].get_mpz_t());
    if (r != 0)
        throw std::logic_error("ext_count: Riedtmann-Peng value not integral");
    return quo;
}

long long HallTables::euler(int a, int b) const {
    return euler_form(catalog_->quiver(), catalog_->dim(a), catalog_->dim(b));
}

}  // namespace deltahall
