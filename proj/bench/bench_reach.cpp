#include "csp/exec.hpp"
#include "csp/lang.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double best(int reps, F&& f) {
    double out = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        f();
        out = std::min(out, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app("serial vs parallel bounded reachability");
    std::string file = std::string(CSP_SOURCE_DIR) + "/samples/add.csp";
    std::string name = "add";
    std::uint64_t natBound = 120;
    std::size_t depth = 1000;
    int reps = 3;
    app.add_option("--file", file)->capture_default_str();
    app.add_option("--name", name)->capture_default_str();
    app.add_option("--nat-bound", natBound)->capture_default_str();
    app.add_option("--depth", depth)->capture_default_str();
    app.add_option("--reps", reps)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    csp::lang::Environment env(csp::lang::parse(ss.str()));
    const csp::System g = env.evaluate(name);

    csp::ReachOptions options;
    options.natBound = natBound;
    options.depthBound = depth;
    csp::ReachReport serial;
    csp::ReachReport parallel;
    const double ts = best(reps, [&] { serial = csp::reachSerial(g, options); });
    const double tp = best(reps, [&] { parallel = csp::reach(g, options); });

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << name << " at nat bound " << natBound << ": " << serial.visited << " states, " << serial.transitions
              << " transitions\n";
    std::cout << "serial   " << ts * 1e3 << " ms\n";
    std::cout << "parallel " << tp * 1e3 << " ms (" << threads << " threads, speedup " << ts / tp << ")\n";
    if (!(serial == parallel)) {
        std::cout << "reports differ\n";
        return 1;
    }
    std::cout << "reports identical\n";
    return 0;
}
