// Batch driver: builds the class catalog for a quiver over F_q, generates
// structure-constant tables, and runs the identity check suites. All output
// is exact; no floating point anywhere.
//
// Exit codes: 0 success, 1 an identity check failed, 2 configuration or
// cap error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "deltahall/checks.hpp"
#include "deltahall/json_io.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw deltahall::config_error("cannot write to " + path);
    out << content;
}

void print_report(const deltahall::CheckReport& rep) {
    std::cout << (rep.ok() ? "pass" : "FAIL") << " " << rep.suite << ": "
              << rep.checked << " checks, " << rep.failures.size()
              << " failures\n";
    for (const auto& f : rep.failures)
        std::cout << "  counterexample: " << f.identity << " at " << f.operands
                  << (f.detail.empty() ? "" : " -- " + f.detail) << "\n";
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact engine for weighted Hall algebras of quiver representations "
        "over a prime field"};

    std::string quiver_path, out_path, check_name, table_name, twist_path;
    long q = 0;
    int max_dim = 3;
    int jobs = 1;
    long long cap_matrices = 50'000'000;
    long long cap_subspaces = 1'000'000;

    app.add_option("--quiver", quiver_path,
                   "quiver JSON file: {\"vertices\": n, \"arrows\": [[s,t],...]}")
        ->required();
    app.add_option("--q", q, "prime order of the ground field")->required();
    app.add_option("--max-dim", max_dim,
                   "catalog bound on total dimension (default 3)");
    app.add_option("--out", out_path, "output file (default stdout)");
    auto* check_opt =
        app.add_option("--check", check_name,
                       "run an identity suite: green|assoc|ext-assoc|"
                       "twist-assoc|derived-iso|central|parity|lemma43|"
                       "tensor|rank1|rank2|commute");
    auto* table_opt =
        app.add_option("--table", table_name,
                       "write a structure-constant table: "
                       "hall|delta|derived|ext|twisted");
    app.add_option("--twist", twist_path, "twist matrix JSON: {\"T\": [[...]]}");
    app.add_option("--jobs", jobs, "worker threads (default 1)");
    app.add_option("--cap-matrices", cap_matrices,
                   "cap on matrix-tuple / hom-point enumerations");
    app.add_option("--cap-subspaces", cap_subspaces,
                   "cap on subspace-tuple enumerations");
    check_opt->excludes(table_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!deltahall::is_prime(q))
            throw deltahall::config_error("--q must be prime, got " +
                                          std::to_string(q));
        if (max_dim < 0)
            throw deltahall::config_error("--max-dim must be >= 0");
        if (jobs < 1) throw deltahall::config_error("--jobs must be >= 1");
        if (cap_matrices <= 0 || cap_subspaces <= 0)
            throw deltahall::config_error("caps must be positive");

        deltahall::Quiver quiver = deltahall::load_quiver_file(quiver_path);

        std::optional<deltahall::TwistForm> twist;
        if (!twist_path.empty())
            twist = deltahall::load_twist_file(twist_path,
                                               quiver.vertex_count());

        deltahall::EnumerationCaps caps;
        caps.matrix_tuples = cap_matrices;
        caps.hom_points = cap_matrices;
        caps.subspace_tuples = cap_subspaces;

        deltahall::Catalog catalog =
            deltahall::Catalog::enumerate(quiver, q, max_dim, caps);
        deltahall::HallTables tables(catalog, jobs);

        if (!check_name.empty()) {
            deltahall::CheckReport rep =
                deltahall::run_check(check_name, tables, twist, jobs);
            print_report(rep);
            if (!out_path.empty())
                write_output(out_path,
                             deltahall::report_to_json(rep, tables));
            return rep.ok() ? 0 : 1;
        }

        if (!table_name.empty()) {
            deltahall::TableKind kind =
                deltahall::table_kind_from_name(table_name);
            write_output(out_path, deltahall::table_to_json(kind, tables,
                                                            twist, jobs));
            return 0;
        }

        std::string text = deltahall::catalog_to_json(catalog);
        write_output(out_path, text);
        (out_path.empty() ? std::cerr : std::cout)
            << "classes: " << catalog.size() << "\n";
        return 0;
    } catch (const deltahall::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const deltahall::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const deltahall::truncation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
