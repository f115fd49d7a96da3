#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sln/cli.hpp"

namespace {

int emit(const sln::CommandResult& result, const std::string& format = "json") {
    std::cerr << "status: "
              << (result.status == sln::Status::ok
                      ? "ok"
                      : result.status == sln::Status::mismatch ? "mismatch" : "error")
              << " (" << result.elapsed_ms << " ms)\n";
    if (format == "csv" && result.payload.contains("csv"))
        std::cout << result.payload["csv"].get<std::string>();
    else
        std::cout << result.payload.dump(2) << "\n";
    return sln::exit_code(result);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact decomposition of tensor powers of the traceless-matrix adjoint module:\n"
        "closed-form multiplicities, derangement identities, the walled diagram algebra,\n"
        "and an independent character-theoretic oracle."};
    app.require_subcommand(1);

    int derange_k = 8;
    auto* derangements = app.add_subcommand("derangements", "Derangement table by two methods");
    derangements->add_option("--k", derange_k, "Largest k in the table");

    int table_k = 4;
    std::string format = "json";
    auto* table = app.add_subcommand("table", "Full multiplicity table with checksum");
    table->add_option("--k", table_k, "Tensor power");
    table->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    int mult_k = 0;
    std::string lambda_text;
    std::string mu_text;
    auto* mult = app.add_subcommand("multiplicity", "One multiplicity via both routes");
    mult->add_option("--k", mult_k, "Tensor power")->required();
    mult->add_option("--lambda", lambda_text, "Comma-separated partition, e.g. 2,1");
    mult->add_option("--mu", mu_text, "Comma-separated partition, e.g. 2,1");

    int oracle_n = 0;
    int oracle_k = 0;
    bool compare = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force character decomposition");
    oracle->add_option("--n", oracle_n, "Rank parameter of the algebra")->required();
    oracle->add_option("--k", oracle_k, "Tensor power")->required();
    oracle->add_flag("--compare", compare, "Compare against the closed form");

    int verify_n = 4;
    int verify_k = 2;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run a module invariant suite");
    verify->add_option("--suite", suite, "partitions, young, brauer, tensor, or all")
        ->check(CLI::IsMember({"partitions", "young", "brauer", "tensor", "all"}));
    verify->add_option("--n", verify_n, "Rank parameter for brauer/tensor suites");
    verify->add_option("--k", verify_k, "Size parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints usage/diagnostic
        return 2;
    }

    try {
        if (derangements->parsed()) return emit(sln::cmd_derangements(derange_k));
        if (table->parsed()) return emit(sln::cmd_table(table_k, format), format);
        if (mult->parsed())
            return emit(sln::cmd_multiplicity(mult_k, sln::Partition::parse(lambda_text),
                                              sln::Partition::parse(mu_text)));
        if (oracle->parsed()) return emit(sln::cmd_oracle(oracle_n, oracle_k, compare));
        if (verify->parsed()) return emit(sln::cmd_verify(suite, verify_n, verify_k));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
