#include "commlab/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace commlab::simd {

namespace {

bool cpu_has_avx2()
{
#if defined(COMMLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable* initial_table()
{
    const auto isas = available_isas();
    if (const char* env = std::getenv("COMMLAB_SIMD")) {
        const std::string want{env};
        for (Isa isa : isas) {
            if (isa_name(isa) == want) {
                return &kernels_for(isa);
            }
        }
    }
    return &kernels_for(isas.back());
}

std::atomic<const KernelTable*>& active_slot()
{
    static std::atomic<const KernelTable*> slot{initial_table()};
    return slot;
}

} // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    }
    return "unknown";
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out{Isa::Scalar};
    if (cpu_has_avx2()) {
        out.push_back(Isa::Avx2);
    }
    return out;
}

const KernelTable& kernels_for(Isa isa)
{
    switch (isa) {
    case Isa::Scalar:
        return scalar_kernels();
    case Isa::Avx2:
#if defined(COMMLAB_HAVE_AVX2)
        if (cpu_has_avx2()) {
            return avx2_kernels();
        }
#endif
        break;
    }
    throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
}

const KernelTable& kernels()
{
    return *active_slot().load(std::memory_order_acquire);
}

void set_active_isa(Isa isa)
{
    active_slot().store(&kernels_for(isa), std::memory_order_release);
}

} // namespace commlab::simd
