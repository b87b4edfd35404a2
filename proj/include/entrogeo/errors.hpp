#pragma once

#include <stdexcept>
#include <string>

namespace entrogeo {

// Validation tolerance used by default throughout: the accuracy budget of
// the Jacobi eigensolver at desk scale.
inline constexpr double default_tol = 1e-9;

// Failure classes surfaced by validation and the numeric kernels.
enum class errc {
    non_finite,
    negative_weight,
    sum_not_one,
    not_hermitian,
    trace_not_one,
    not_positive,
    dimension_mismatch,
    kind_mismatch,
    no_convergence,
    empty_spectrum,
    output_not_distribution,
    not_contractive,
    bad_argument,
    io_failure,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace entrogeo
