#include "dcp/partition.hpp"

#include <numeric>
#include <sstream>

#include "dcp/errors.hpp"

namespace dcp {

Partition::Partition(const std::vector<int>& parts) {
    long long sum = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        int p = parts[i];
        if (p < 0)
            throw NotAPartition("negative part");
        if (i > 0 && parts[i - 1] < p)
            throw NotAPartition("parts must be weakly decreasing");
        sum += p;
    }
    if (sum == 0)
        throw NotAPartition("empty partition (n must be positive)");
    n_ = static_cast<int>(sum);
    parts_.assign(parts.begin(), parts.end());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (static_cast<int>(parts_.size()) > n_)
        throw NotAPartition("more nonzero parts than n");
    parts_.resize(n_, 0);
}

Partition Partition::conjugate() const {
    std::vector<int> c(n_, 0);
    for (int i = 1; i <= n_; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        c[i - 1] = count;
    }
    return Partition(c);
}

int Partition::delta(int k) const {
    if (k < 1 || k > n_)
        throw IndexOutOfRange("delta: k must be in 1..n");
    Partition c = conjugate();
    int s = 0;
    for (int i = 0; i < k; ++i)
        s += c.parts()[n_ - 1 - i];
    return s;
}

std::vector<int> Partition::delta_sequence() const {
    Partition c = conjugate();
    std::vector<int> d(n_);
    int s = 0;
    for (int k = 1; k <= n_; ++k) {
        s += c.parts()[n_ - k];
        d[k - 1] = s;
    }
    return d;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n_; ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition make_partition(const std::vector<int>& parts) { return Partition(parts); }

Partition hook_to_partition(const Hook& h) {
    std::vector<int> parts;
    parts.push_back(h.a + 1);
    for (int i = 0; i < h.b; ++i) parts.push_back(1);
    return Partition(parts);
}

std::optional<Hook> as_hook(const Partition& p) {
    const auto& v = p.parts();
    int len = 0;
    for (int x : v)
        if (x > 0) ++len;
    for (int i = 1; i < len; ++i)
        if (v[i] != 1) return std::nullopt;
    return Hook{v[0] - 1, len - 1};
}

} // namespace dcp
