#ifndef DCP_ERRORS_HPP
#define DCP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcp {

struct NotAPartition : std::invalid_argument {
    explicit NotAPartition(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct NegativeCoefficient : std::invalid_argument {
    explicit NegativeCoefficient(const std::string& what) : std::invalid_argument(what) {}
};

// t-binomial division left a remainder; always indicates an implementation bug
struct InexactDivision : std::logic_error {
    explicit InexactDivision(const std::string& what) : std::logic_error(what) {}
};

struct TruncationTooSmall : std::invalid_argument {
    explicit TruncationTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

struct NotArtinianWithinCap : std::runtime_error {
    explicit NotArtinianWithinCap(const std::string& what) : std::runtime_error(what) {}
};

struct NonHomogeneousGenerator : std::invalid_argument {
    explicit NonHomogeneousGenerator(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace dcp

#endif
