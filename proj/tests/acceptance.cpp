// Acceptance suite: every verification target runs exhaustively at its
// stated scale with exact arithmetic and prints one pass/fail line. Exit
// status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "deltahall/checks.hpp"
#include "deltahall/json_io.hpp"

using namespace deltahall;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> body;
};

struct Config {
    std::string name;
    Quiver quiver;
    long q;
    int d;
};

const Quiver kA1{1, {}};
const Quiver kA2{2, {{0, 1}}};
const Quiver kTwoPoints{2, {}};

HallTables& tables_for(const Config& cfg) {
    static std::map<std::string, std::unique_ptr<Catalog>> catalogs;
    static std::map<std::string, std::unique_ptr<HallTables>> tables;
    auto it = tables.find(cfg.name);
    if (it != tables.end()) return *it->second;
    catalogs[cfg.name] = std::make_unique<Catalog>(
        Catalog::enumerate(cfg.quiver, cfg.q, cfg.d));
    tables[cfg.name] =
        std::make_unique<HallTables>(*catalogs[cfg.name], 1);
    return *tables[cfg.name];
}

const std::vector<Config> kMainConfigs{
    {"A1 q=2 D=3", kA1, 2, 3},
    {"A1 q=3 D=3", kA1, 3, 3},
    {"A2 q=2 D=3", kA2, 2, 3},
};

bool run_suite_over(const std::vector<Config>& configs,
                    const std::string& suite, std::string& msg) {
    std::ostringstream os;
    bool ok = true;
    for (const Config& cfg : configs) {
        CheckReport rep = run_check(suite, tables_for(cfg));
        os << cfg.name << ": " << rep.checked << " checks";
        if (!rep.ok()) {
            ok = false;
            os << ", " << rep.failures.size() << " FAILED (first: "
               << rep.failures[0].identity << " at "
               << rep.failures[0].operands << ")";
        }
        os << "; ";
    }
    msg = os.str();
    return ok;
}

int find_class(const Catalog& cat, const DimVector& d, int rank0 = -1) {
    for (int id : cat.classes_with_dim(d)) {
        if (rank0 < 0 || cat.rep(id).maps[0].rank() == rank0) return id;
    }
    return -1;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "Green's formula, exhaustive", [](std::string& msg) {
        // A2 at D=2 required, D=3 also swept since it is cheap here
        std::vector<Config> cfgs = kMainConfigs;
        cfgs.push_back({"A2 q=2 D=2", kA2, 2, 2});
        return run_suite_over(cfgs, "green", msg);
    }});

    criteria.push_back({2, "weighted Hall associativity, exhaustive",
                        [](std::string& msg) {
        return run_suite_over(kMainConfigs, "assoc", msg);
    }});

    criteria.push_back({3, "pinned coefficients of [S]*[S] on the point",
                        [](std::string& msg) {
        const long q = 2;
        HallTables& t = tables_for(kMainConfigs[0]);
        const Catalog& cat = t.catalog();

        // independent derivation: the only contributing cycles are
        // (L,I,N) = (S,0,S) into S^2 and (0,S,0) into 0, with
        // F^{S^2}_{S,S} = q+1, a_S = q-1, a_{S^2} = (q^2-1)(q^2-q),
        // <S,S> = 1
        Rational aS(q - 1), a0(1);
        Rational aS2((q * q - 1) * (q * q - q));
        Rational fS2(q + 1);
        QuadNumber expect_s2 =
            (aS * aS * a0 / aS2 * fS2) * vpow(q, -1);
        QuadNumber expect_zero = (a0 * aS * a0 / a0) * vpow(q, 1);
        bool formula_matches =
            expect_s2 == QuadNumber(q, Rational(0), Rational(1, 4)) &&
            expect_zero == QuadNumber(q, Rational(0), Rational(1));

        DeltaElement s = DeltaElement::basis(1, q);
        DeltaElement prod = delta_product(s, s, t);
        bool engine_matches = prod.terms().size() == 2 &&
                              prod.coeff(0) == expect_zero &&
                              prod.coeff(2) == expect_s2;
        (void)cat;
        msg = "closed-form rederivation " +
              std::string(formula_matches ? "agrees" : "DISAGREES") +
              "; engine " + (engine_matches ? "matches" : "DIFFERS");
        return formula_matches && engine_matches;
    }});

    criteria.push_back({4, "derived scaling law and basis-change map",
                        [](std::string& msg) {
        return run_suite_over(kMainConfigs, "derived-iso", msg);
    }});

    criteria.push_back({5, "parity of cycles and the exponent bridge",
                        [](std::string& msg) {
        std::string m1, m2;
        bool ok = run_suite_over(kMainConfigs, "parity", m1) &&
                  run_suite_over(kMainConfigs, "lemma43", m2);
        msg = m1 + "| " + m2;
        return ok;
    }});

    criteria.push_back({6, "extended, twisted and half-lattice associativity",
                        [](std::string& msg) {
        std::vector<Config> cfgs{{"A1 q=2 D=3", kA1, 2, 3},
                                 {"A1 q=3 D=3", kA1, 3, 3},
                                 {"A2 q=2 D=2", kA2, 2, 2}};
        std::string m1, m2;
        bool ok = run_suite_over(cfgs, "ext-assoc", m1) &&
                  run_suite_over(cfgs, "twist-assoc", m2);
        msg = m1 + "| " + m2;
        return ok;
    }});

    criteria.push_back({7, "semi-derived structure constants are rational",
                        [](std::string& msg) {
        std::ostringstream os;
        bool ok = true;
        for (const Config& cfg : std::vector<Config>{
                 {"A1 q=2 D=3", kA1, 2, 3},
                 {"A1 q=3 D=3", kA1, 3, 3},
                 {"A2 q=2 D=2", kA2, 2, 2}}) {
            HallTables& t = tables_for(cfg);
            const Catalog& cat = t.catalog();
            int nv = cat.quiver().vertex_count();
            long q = cat.q();
            long long checked = 0;
            std::vector<HalfK0Class> kaps{
                HalfK0Class::zero(nv), HalfK0Class::of(K0Class::unit(nv, 0))};
            for (int a = 0; a < cat.size() && ok; ++a)
                for (int b = 0; b < cat.size() && ok; ++b) {
                    if (cat.total_dim(a) + cat.total_dim(b) >
                        cat.max_total_dim())
                        continue;
                    for (const auto& ka : kaps)
                        for (const auto& kb : kaps) {
                            ExtElement x =
                                ExtElement::basis(ExtLabel{a, ka}, q);
                            ExtElement y =
                                ExtElement::basis(ExtLabel{b, kb}, q);
                            for (const auto& [l, c] :
                                 sdh_product(x, y, t).terms()) {
                                ++checked;
                                if (!c.is_rational()) ok = false;
                            }
                        }
                }
            os << cfg.name << ": " << checked << " coefficients; ";
        }
        msg = os.str();
        return ok;
    }});

    criteria.push_back({8, "K classes central; reduction epimorphism",
                        [](std::string& msg) {
        return run_suite_over(kMainConfigs, "central", msg);
    }});

    criteria.push_back({9, "tensor factorization and degrees",
                        [](std::string& msg) {
        return run_suite_over(kMainConfigs, "tensor", msg);
    }});

    criteria.push_back({10, "coideal generator relations",
                        [](std::string& msg) {
        std::ostringstream os;
        bool ok = true;

        // non-adjacent generators commute on the two-point quiver
        Config flat{"A1uA1 q=2 D=2", kTwoPoints, 2, 2};
        CheckReport comm = run_check("commute", tables_for(flat));
        os << "commute: " << comm.checked << " pairs";
        ok &= comm.ok() && comm.checked == 1;

        // adjacent pair: exact proportionality at q=2 and q=3, both orders,
        // with one c*v^k expression matching both specializations
        QuadNumber lambda2, lambda3;
        for (long q : {2L, 3L}) {
            Config cfg{"A2 q=" + std::to_string(q) + " D=3", kA2, q, 3};
            CheckReport rep = run_check("rank2", tables_for(cfg));
            ok &= rep.ok() && rep.rank2_pairs.size() == 2;
            for (const auto& p : rep.rank2_pairs) {
                ok &= p.residual_zero && p.lambda.has_value();
                if (p.i == 0 && p.lambda)
                    (q == 2 ? lambda2 : lambda3) = *p.lambda;
            }
        }
        bool fitted = false;
        for (long k = -8; k <= 8 && !fitted; ++k) {
            QuadNumber c2 = lambda2 * vpow(2, -k);
            QuadNumber c3 = lambda3 * vpow(3, -k);
            if (c2.is_rational() && c3.is_rational() &&
                c2.rat_part() == c3.rat_part()) {
                fitted = true;
                os << "; lambda = " << rational_to_string(c2.rat_part())
                   << " * v^" << k << " at both q";
            }
        }
        ok &= fitted;
        msg = os.str();
        return ok;
    }});

    int failures = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (const Criterion& c : criteria) {
        std::string msg;
        bool ok = false;
        try {
            ok = c.body(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.number << ". "
                  << c.name << "  [" << msg << "]\n";
        if (!ok) ++failures;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
              << " (" << criteria.size() << " criteria, "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                     .count()
              << " ms)\n";
    return failures;
}
