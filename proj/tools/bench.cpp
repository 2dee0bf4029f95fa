// Compares the OpenMP kernels against their serial reference paths and
// reports wall-clock times. Exits nonzero if the results ever differ.
#include <cordal/augment.hpp>
#include <cordal/braid.hpp>
#include <cordal/relations.hpp>
#include <cordal/torus.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace cordal;

using Clock = std::chrono::steady_clock;

template <typename F>
long timed_ms(F&& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
        .count();
}

void report(const std::string& label, long serial_ms, long parallel_ms,
            int jobs) {
    std::cout << label << ": serial " << serial_ms << " ms, " << jobs
              << " jobs " << parallel_ms << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 0;
    for (int a = 1; a < argc; ++a) {
        const std::string arg = argv[a];
        if (arg == "--jobs" && a + 1 < argc) {
            jobs = std::atoi(argv[++a]);
        } else {
            std::cerr << "usage: cordal_bench [--jobs N]\n";
            return 1;
        }
    }

    bool ok = true;

    {
        const Braid b = torus_braid(4, 5);
        RelationSet serial, parallel;
        const long sms =
            timed_ms([&] { serial = windowed_relations_serial(b, 1, 3); });
        const long pms =
            timed_ms([&] { parallel = windowed_relations(b, 1, 3, jobs); });
        report("relations beta(4,5) window 3", sms, pms, jobs);
        if (!(serial.items == parallel.items)) {
            std::cerr << "relation kernels disagree\n";
            ok = false;
        }
    }

    {
        const Presentation pres = finite_presentation(1, 9, 0);
        const SpecParams spec{5, 2, 3, 4};
        std::int64_t serial = 0, parallel = 0;
        const long sms =
            timed_ms([&] { serial = count_augmentations_serial(pres, spec); });
        const long pms =
            timed_ms([&] { parallel = count_augmentations(pres, spec, jobs); });
        report("aug T(1,9) d=5", sms, pms, jobs);
        if (serial != parallel) {
            std::cerr << "augmentation kernels disagree: " << serial
                      << " vs " << parallel << "\n";
            ok = false;
        }
    }

    return ok ? 0 : 1;
}
