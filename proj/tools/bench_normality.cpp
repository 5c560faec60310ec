#include <chrono>
#include <iostream>

#include "qrs/normality.hpp"

using namespace qrs;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Pruned kernel vs full-grid serial reference on small weights where the
// reference is still tractable; both must agree on the result counts.
void bench_reference(const Presentation& p) {
    std::vector<Weight> ws = {{1, 1}, {1, 2}, {2, 2}};
    const int grid = 3;
    std::cout << "  weight        pruned        reference   found\n";
    for (const auto& w : ws) {
        auto t0 = Clock::now();
        auto fast = find_normal(w, p, grid);
        double tf = ms_since(t0);
        t0 = Clock::now();
        auto ref = find_normal_reference(w, p, grid);
        double tr = ms_since(t0);
        std::cout << "  (" << w[0] << "," << w[1] << ")    " << tf << " ms    "
                  << tr << " ms   " << fast.size()
                  << (fast.size() == ref.size() ? "" : "  MISMATCH") << "\n";
    }
}

void bench_span(const Presentation& p, int max_degree) {
    auto t0 = Clock::now();
    auto serial = normal_span_report(max_degree, p, -1, false);
    double ts = ms_since(t0);
    t0 = Clock::now();
    auto par = normal_span_report(max_degree, p, -1, true);
    double tp = ms_since(t0);
    std::cout << "  degree <= " << max_degree << ": serial " << ts << " ms, parallel "
              << tp << " ms, speedup " << (tp > 0 ? ts / tp : 0) << "x, agree "
              << (serial.all_agree() && par.all_agree() ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int max_degree = argc > 1 ? std::atoi(argv[1]) : 7;
    for (Algebra a : {Algebra::U, Algebra::V}) {
        const Presentation& p = build_presentation(a);
        std::cout << "== algebra " << p.id() << " ==\n";
        std::cout << "pruned kernel vs full-grid reference (grid 3):\n";
        bench_reference(p);
        std::cout << "weight-space scan, serial vs OpenMP:\n";
        bench_span(p, max_degree);
    }
    return 0;
}
