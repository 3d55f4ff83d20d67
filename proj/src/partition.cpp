#include "hookring/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ']';
    return out.str();
}

Partition parse_partition(const std::string& text) {
    std::string body = text;
    // Strip surrounding whitespace and optional brackets.
    auto first = body.find_first_not_of(" \t");
    auto last = body.find_last_not_of(" \t");
    body = (first == std::string::npos) ? "" : body.substr(first, last - first + 1);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in partition: " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    std::istringstream in(body);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        int value;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition entry '" + token + "' in " + text);
        }
        while (pos < token.size() && (token[pos] == ' ' || token[pos] == '\t')) ++pos;
        if (pos != token.size())
            throw std::invalid_argument("malformed partition entry '" + token + "' in " + text);
        if (value < 1) throw std::invalid_argument("partition parts must be positive in " + text);
        if (!parts.empty() && parts.back() < value) {
            std::ostringstream msg;
            msg << "partition parts out of order: " << parts.back() << " < " << value << " in " << text;
            throw std::invalid_argument(msg.str());
        }
        parts.push_back(value);
    }
    if (parts.empty() && !body.empty())
        throw std::invalid_argument("malformed partition: " + text);
    return Partition(std::move(parts));
}

namespace {

void enumerate(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        prefix.push_back(next);
        enumerate(remaining - next, next, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions(int n) {
    if (n < 0) throw std::invalid_argument("all_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(n, n, prefix, out);
    return out;
}

Partition theta(const Partition& lambda) {
    if (lambda.empty()) return {};
    return Partition(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
}

Partition interior(const Partition& alpha) {
    std::vector<int> parts;
    for (int p : alpha.parts())
        if (p > 1) parts.push_back(p - 1);
    return Partition(std::move(parts));
}

int boundary_size(const Partition& alpha) { return alpha.length(); }

int delta(const Partition& lambda) {
    int count = 0;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda.part(i) != lambda.part(i + 1)) ++count;
    return count;
}

Partition hook_partition(int n, int k) {
    if (k < 0 || k >= n) throw std::out_of_range("hook_partition: need 0 <= k <= n-1");
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), k, 1);
    return Partition(std::move(parts));
}

int level(const Partition& lambda) { return lambda.size() - lambda.part(0); }

Int centralizer_order(const Partition& rho) {
    Int z = 1;
    int i = 0;
    while (i < rho.length()) {
        int j = i;
        while (j < rho.length() && rho.parts()[j] == rho.parts()[i]) ++j;
        int mult = j - i;
        for (int m = 1; m <= mult; ++m) z = ck_mul(z, ck_mul(rho.parts()[i], m));
        i = j;
    }
    return z;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    for (int col = 1; col <= lambda.part(0); ++col) {
        int rows = 0;
        for (int p : lambda.parts())
            if (p >= col) ++rows;
        parts.push_back(rows);
    }
    return Partition(std::move(parts));
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f = ck_mul(f, i);
    return f;
}

} // namespace hookring
