#include "neardist/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"neardist: separated point sets with nearly equal distances"};
    app.require_subcommand(1);

    neardist::RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--d", cfg.d, "ambient dimension");
        sub->add_option("--k", cfg.k, "number of windows / distances");
        sub->add_option("--n", cfg.n, "number of points");
        sub->add_option("--eps", cfg.eps, "multiplicative window ratio");
        sub->add_option("--eps1", cfg.eps1, "simplex-sum scale factor");
        sub->add_option("--length", cfg.length, "additive window length");
        sub->add_option("--scale", cfg.scale, "construction scale");
        sub->add_option("--ratio", cfg.ratio, "scale cascade ratio");
        sub->add_option("--construction", cfg.construction, "generator name");
        sub->add_option("--in", cfg.in, "input point-set file");
        sub->add_option("--out", cfg.out, "output file");
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
        sub->add_option("--bound", cfg.bound, "turan_m | turan_dk");
    };

    auto* generate = app.add_subcommand("generate", "write a construction and its metadata sidecar");
    add_common(generate);
    generate->add_option("--t1", cfg.t1, "first column gap (columns)");
    generate->add_option("--t2", cfg.t2, "second column gap (columns)");

    auto* analyze = app.add_subcommand("analyze", "best k windows and Turan comparison");
    add_common(analyze);

    auto* verify = app.add_subcommand("verify", "k-distance / weak-eps / schuette / certify checks");
    add_common(verify);
    verify->add_option("--check", cfg.check, "comma separated checks, or 'all'");
    verify->add_option("--D", cfg.ratio_threshold, "ratio threshold for certify (> 2)");

    auto* turan = app.add_subcommand("turan", "print T(n, s)");
    add_common(turan);
    turan->add_option("--s", cfg.s, "forbidden clique size");

    auto* mdk = app.add_subcommand("mdk", "print m(d, k) and a witness");
    add_common(mdk);

    auto* reproduce = app.add_subcommand("reproduce", "run the reproduction table");
    add_common(reproduce);

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();
    return neardist::run(cfg, std::cout);
}
