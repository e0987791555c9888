#ifndef DCP_PARTITION_HPP
#define DCP_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

namespace dcp {

// A partition of n, stored zero-padded to exactly n terms so that the
// tail sums delta_k read off the conjugate directly.
class Partition {
public:
    // Accepts unpadded weakly decreasing nonnegative input and normalizes.
    // Throws NotAPartition on increasing or negative entries.
    explicit Partition(const std::vector<int>& parts);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;

    // delta_k = mu'_n + mu'_{n-1} + ... + mu'_{n-k+1}, 1 <= k <= n
    int delta(int k) const;
    std::vector<int> delta_sequence() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_; // length n_, weakly decreasing, may end in zeros
    int n_;
};

// Hook (a|b) in Frobenius notation: the partition (a+1, 1^b) of n = a+b+1.
struct Hook {
    int a = 0; // arm
    int b = 0; // leg

    int n() const { return a + b + 1; }
    bool operator==(const Hook& o) const { return a == o.a && b == o.b; }
};

Partition make_partition(const std::vector<int>& parts);
Partition hook_to_partition(const Hook& h);
std::optional<Hook> as_hook(const Partition& p);

} // namespace dcp

#endif
