#pragma once

#include <numeric>
#include <vector>

namespace fatgraph {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[a] = b;
        return true;
    }

    int size() const { return static_cast<int>(parent_.size()); }

  private:
    std::vector<int> parent_;
};

} // namespace fatgraph
