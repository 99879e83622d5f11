#include "mapdist/blossom.hpp"

#include <algorithm>

#include "mapdist/errors.hpp"

namespace mapdist {

int tree_charge(const BlossomNode& n) {
    switch (n.kind) {
        case BlossomNode::Kind::WhiteLeaf: return 1;
        case BlossomNode::Kind::BlackLeaf: return -1;
        case BlossomNode::Kind::Vertex: {
            int q = 0;
            for (const auto& c : n.children) q += tree_charge(c);
            return q;
        }
    }
    return 0;
}

namespace {

void collect_steps(const BlossomNode& n, std::vector<int>& out) {
    switch (n.kind) {
        case BlossomNode::Kind::WhiteLeaf: out.push_back(-1); return;
        case BlossomNode::Kind::BlackLeaf: out.push_back(+1); return;
        case BlossomNode::Kind::Vertex:
            for (const auto& c : n.children) collect_steps(c, out);
            return;
    }
}

}  // namespace

std::vector<int> contour_steps(const BlossomTree& t) {
    std::vector<int> out;
    collect_steps(t.top, out);
    return out;
}

int contour_distance(const BlossomTree& t) {
    int pos = 0, best = 0;
    for (int s : contour_steps(t)) {
        pos += s;
        best = std::max(best, pos);
    }
    return best;
}

Rational tree_count(OracleFamily family, int p, int N) {
    switch (family) {
        case OracleFamily::Tetravalent: {
            Rational catalan = Rational::binomial(2 * N, N) / Rational(N + 1);
            Rational pw(1);
            for (int i = 0; i < N; ++i) pw *= Rational(3);
            return pw * catalan;
        }
        case OracleFamily::Trivalent: {
            // counted by the pair recurrence behind S = 2gR + gS^2, R = 1 + 2gRS
            std::vector<Rational> r{Rational(1)}, s{Rational(0)};
            for (int n = 1; n <= N; ++n) {
                Rational sn = r[n - 1] * Rational(2);
                for (int a = 1; a + 1 <= n; ++a) sn += s[a] * s[n - 1 - a];
                s.push_back(sn);
                Rational rn(0);
                for (int a = 1; a <= n - 1 + 1; ++a)
                    if (a < static_cast<int>(s.size()) && n - 1 - a >= 0)
                        rn += s[a] * r[n - 1 - a] * Rational(2);
                r.push_back(rn);
            }
            return r[N];
        }
        case OracleFamily::BipartiteP: {
            if (p < 3) throw usage_error("tree_count: p must be >= 3");
            Rational fuss = Rational::binomial(static_cast<long>(p - 1) * N, N) /
                            Rational(static_cast<long>(p - 2) * N + 1);
            Rational pw(1);
            for (int i = 0; i < N; ++i) pw *= Rational(p - 1);
            return pw * fuss;
        }
    }
    throw usage_error("tree_count: unknown family");
}

namespace {

constexpr int kPoolMax = 5;

// memoized pools of small subtrees, streamed composition above kPoolMax
class Enumerator {
  public:
    Enumerator(OracleFamily family, int p) : family_(family), p_(p) {}

    void stream_r(int n, const std::function<void(const BlossomNode&)>& fn) {
        switch (family_) {
            case OracleFamily::Tetravalent: stream_r4(n, fn); return;
            case OracleFamily::Trivalent: stream_r3(n, fn); return;
            case OracleFamily::BipartiteP: stream_rp(n, fn); return;
        }
    }

    void stream_s(int n, const std::function<void(const BlossomNode&)>& fn) {
        if (family_ != OracleFamily::Trivalent)
            throw usage_error("one-leg trees exist only in the trivalent family");
        stream_s3(n, fn);
    }

  private:
    static BlossomNode make4(int pos, const BlossomNode& a, const BlossomNode& b) {
        std::vector<BlossomNode> ordered;
        ordered.reserve(3);
        int sub = 0;
        const BlossomNode* subs[2] = {&a, &b};
        for (int i = 0; i < 3; ++i) {
            if (i == pos)
                ordered.push_back(BlossomNode::black());
            else
                ordered.push_back(*subs[sub++]);
        }
        return BlossomNode::vertex(std::move(ordered));
    }

    void stream_r4(int n, const std::function<void(const BlossomNode&)>& fn) {
        if (n <= kPoolMax) {
            for (const auto& t : pool4(n)) fn(t);
            return;
        }
        for (int pos = 0; pos < 3; ++pos)
            for (int a = 0; a <= n - 1; ++a)
                stream_r4(a, [&](const BlossomNode& ta) {
                    stream_r4(n - 1 - a,
                              [&](const BlossomNode& tb) { fn(make4(pos, ta, tb)); });
                });
    }

    const std::vector<BlossomNode>& pool4(int n) {
        auto it = pool4_.find(n);
        if (it != pool4_.end()) return it->second;
        std::vector<BlossomNode> v;
        if (n == 0) {
            v.push_back(BlossomNode::white());
        } else {
            for (int pos = 0; pos < 3; ++pos)
                for (int a = 0; a <= n - 1; ++a)
                    for (const auto& ta : pool4(a))
                        for (const auto& tb : pool4(n - 1 - a)) v.push_back(make4(pos, ta, tb));
        }
        return pool4_.emplace(n, std::move(v)).first->second;
    }

    void stream_r3(int n, const std::function<void(const BlossomNode&)>& fn) {
        if (n <= kPoolMax) {
            for (const auto& t : pool3r(n)) fn(t);
            return;
        }
        for (int a = 1; a <= n - 1; ++a)
            stream_s3(a, [&](const BlossomNode& s) {
                stream_r3(n - 1 - a, [&](const BlossomNode& r) {
                    fn(BlossomNode::vertex({s, r}));
                    fn(BlossomNode::vertex({r, s}));
                });
            });
    }

    void stream_s3(int n, const std::function<void(const BlossomNode&)>& fn) {
        if (n < 1) return;
        if (n <= kPoolMax) {
            for (const auto& t : pool3s(n)) fn(t);
            return;
        }
        stream_r3(n - 1, [&](const BlossomNode& r) {
            fn(BlossomNode::vertex({BlossomNode::black(), r}));
            fn(BlossomNode::vertex({r, BlossomNode::black()}));
        });
        for (int a = 1; a + 1 <= n; ++a)
            stream_s3(a, [&](const BlossomNode& s1) {
                stream_s3(n - 1 - a,
                          [&](const BlossomNode& s2) { fn(BlossomNode::vertex({s1, s2})); });
            });
    }

    const std::vector<BlossomNode>& pool3r(int n) {
        auto it = pool3r_.find(n);
        if (it != pool3r_.end()) return it->second;
        std::vector<BlossomNode> v;
        if (n == 0) {
            v.push_back(BlossomNode::white());
        } else {
            for (int a = 1; a <= n - 1; ++a)
                for (const auto& s : pool3s(a))
                    for (const auto& r : pool3r(n - 1 - a)) {
                        v.push_back(BlossomNode::vertex({s, r}));
                        v.push_back(BlossomNode::vertex({r, s}));
                    }
        }
        return pool3r_.emplace(n, std::move(v)).first->second;
    }

    const std::vector<BlossomNode>& pool3s(int n) {
        auto it = pool3s_.find(n);
        if (it != pool3s_.end()) return it->second;
        std::vector<BlossomNode> v;
        if (n >= 1) {
            for (const auto& r : pool3r(n - 1)) {
                v.push_back(BlossomNode::vertex({BlossomNode::black(), r}));
                v.push_back(BlossomNode::vertex({r, BlossomNode::black()}));
            }
            for (int a = 1; a + 1 <= n; ++a)
                for (const auto& s1 : pool3s(a))
                    for (const auto& s2 : pool3s(n - 1 - a))
                        v.push_back(BlossomNode::vertex({s1, s2}));
        }
        return pool3s_.emplace(n, std::move(v)).first->second;
    }

    void stream_rp(int n, const std::function<void(const BlossomNode&)>& fn) {
        if (n == 0) {
            fn(BlossomNode::white());
            return;
        }
        stream_xp(n - 1, [&](const BlossomNode& x) {
            for (int pos = 0; pos < p_ - 1; ++pos) {
                std::vector<BlossomNode> ch(p_ - 1, BlossomNode::black());
                ch[pos] = x;
                fn(BlossomNode::vertex(std::move(ch), 0));
            }
        });
    }

    void stream_xp(int n, const std::function<void(const BlossomNode&)>& fn) {
        std::vector<BlossomNode> ch(p_ - 1);
        stream_xp_rec(n, 0, ch, fn);
    }

    void stream_xp_rec(int left, int slot, std::vector<BlossomNode>& ch,
                       const std::function<void(const BlossomNode&)>& fn) {
        if (slot == p_ - 2) {
            stream_rp(left, [&](const BlossomNode& r) {
                ch[slot] = r;
                fn(BlossomNode::vertex(ch, 1));
            });
            return;
        }
        for (int a = 0; a <= left; ++a)
            stream_rp(a, [&](const BlossomNode& r) {
                ch[slot] = r;
                stream_xp_rec(left - a, slot + 1, ch, fn);
            });
    }

    OracleFamily family_;
    int p_;
    std::map<int, std::vector<BlossomNode>> pool4_, pool3r_, pool3s_;
};

void check_budget(OracleFamily family, int p, int N) {
    int limit = 7;
    if (family == OracleFamily::BipartiteP) limit = (p <= 3) ? 6 : 5;
    if (N < 0 || N > limit)
        throw usage_error("enumeration budget exceeded (N = " + std::to_string(N) + ")");
}

}  // namespace

void for_each_tree(OracleFamily family, int p, int N,
                   const std::function<void(const BlossomTree&)>& fn) {
    check_budget(family, p, N);
    Enumerator en(family, p);
    en.stream_r(N, [&](const BlossomNode& top) {
        BlossomTree t;
        t.family = family;
        t.p = p;
        t.top = top;
        fn(t);
    });
}

std::vector<BlossomTree> enumerate_trees(OracleFamily family, int p, int N) {
    std::vector<BlossomTree> out;
    for_each_tree(family, p, N, [&](const BlossomTree& t) { out.push_back(t); });
    return out;
}

void for_each_s_tree(int N, const std::function<void(const BlossomTree&)>& fn) {
    check_budget(OracleFamily::Trivalent, 0, N);
    Enumerator en(OracleFamily::Trivalent, 0);
    en.stream_s(N, [&](const BlossomNode& top) {
        BlossomTree t;
        t.family = OracleFamily::Trivalent;
        t.top = top;
        fn(t);
    });
}

}  // namespace mapdist
