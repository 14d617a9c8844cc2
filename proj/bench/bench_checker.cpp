// Compares the serial reference and the OpenMP identity-checker kernel on
// the heaviest grids the acceptance suite exercises, and verifies that both
// policies produce the same report while timing them.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef DENDRO_HAVE_OPENMP
#include <omp.h>
#endif

#include "dendro/basis_sets.hpp"
#include "dendro/identities.hpp"
#include "dendro/modeltables.hpp"

using namespace dendro;

namespace {

template <class F>
double time_seconds(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class B>
void run_case(const std::string& name, const OpTable<B>& table, const IdentityList& ids,
              const std::vector<LinComb<B>>& elems, const std::vector<int>& sizes, long max_total) {
    CheckReport serial_rep, parallel_rep;
    double serial = time_seconds([&] {
        serial_rep = check_identities(table, ids, elems, sizes, max_total, CheckPolicy::Serial);
    });
    double parallel = time_seconds([&] {
        parallel_rep = check_identities(table, ids, elems, sizes, max_total, CheckPolicy::Parallel);
    });
    bool same = serial_rep.results.size() == parallel_rep.results.size();
    for (std::size_t i = 0; same && i < serial_rep.results.size(); ++i)
        same = serial_rep.results[i].passed == parallel_rep.results[i].passed &&
               serial_rep.results[i].witness == parallel_rep.results[i].witness;
    std::printf("%-46s serial %7.3fs   parallel %7.3fs   speedup %5.2fx   reports %s\n",
                name.c_str(), serial, parallel, parallel > 0 ? serial / parallel : 0.0,
                same ? "equal" : "DIFFER");
}

}  // namespace

int main() {
#ifdef DENDRO_HAVE_OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both policies run serially\n\n");
#endif

    {
        TridendAlgebra alg;
        auto set = schroeder_set(make_alphabet({"x"}, 0), 4);
        IdentityList ids = qtridendriform_axioms(alg.q);
        run_case("q-tridendriform axioms, total degree <= 6", optable(alg), ids, set.elems,
                 set.sizes, 6);
    }
    {
        DendAlgebra alg;
        auto set = binary_set(make_alphabet({"x"}, 0), 5);
        run_case("dendriform axioms, total degree <= 7", optable(alg), dendriform_axioms(),
                 set.elems, set.sizes, 7);
    }
    {
        QShuffleAlgebra alg;
        auto set = word_set(single_var_letters({"y", "z"}, 1), 2);
        IdentityList ids = qtridendriform_axioms(alg.q);
        for (auto& i : leibniz_identities({"prec", "succ", "bullet"}, alg.lam)) ids.push_back(i);
        run_case("quasi-shuffle axioms + Leibniz, size <= 5", optable(alg), ids, set.elems,
                 set.sizes, 5);
    }
    return 0;
}
