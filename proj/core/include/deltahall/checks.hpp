#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltahall/extended.hpp"
#include "deltahall/hall.hpp"
#include "deltahall/iqg.hpp"

namespace deltahall {

struct CheckFailure {
    std::string identity;  // which law broke
    std::string operands;  // the witnesses, fully spelled out
    std::string detail;    // lhs vs rhs
};

struct Rank2PairReport {
    int i = 0;
    int j = 0;
    int n_ij = 0;
    bool residual_zero = false;
    std::optional<QuadNumber> lambda;
};

struct CheckReport {
    std::string suite;
    long long checked = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes;
    std::vector<Rank2PairReport> rank2_pairs;

    bool ok() const { return failures.empty(); }
};

// green | assoc | ext-assoc | twist-assoc | derived-iso | central | parity |
// lemma43 | tensor | rank1 | rank2 | commute
const std::vector<std::string>& check_suite_names();

// Runs one identity suite exhaustively at the catalog's scale. `twist` is
// consulted by the twist-assoc suite (appended to its built-in forms).
// Throws config_error when the catalog bound cannot support the sweep.
CheckReport run_check(const std::string& suite, const HallTables& tables,
                      const std::optional<TwistForm>& twist = std::nullopt,
                      int jobs = 1);

}  // namespace deltahall
