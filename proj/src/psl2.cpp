#include "klein/psl2.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace klein {

namespace {

void check_same_p(std::int64_t pg, std::int64_t ph)
{
    if (pg != ph)
        throw mixed_modulus_error("elements over different moduli: p=" + std::to_string(pg) +
                                  " vs p=" + std::to_string(ph));
}

} // namespace

GroupElement GroupElement::make(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                                std::int64_t d)
{
    auto red = [p](std::int64_t v) { return ((v % p) + p) % p; };
    GroupElement g{p, red(a), red(b), red(c), red(d)};
    if (red(g.a * g.d - g.b * g.c) != 1)
        throw std::invalid_argument("determinant is not 1 mod p");
    const std::int64_t half = (p - 1) / 2;
    for (std::int64_t entry : {g.a, g.b, g.c, g.d}) {
        if (entry == 0)
            continue;
        if (entry > half) {
            g.a = red(-g.a);
            g.b = red(-g.b);
            g.c = red(-g.c);
            g.d = red(-g.d);
        }
        break;
    }
    return g;
}

GroupElement GroupElement::identity(std::int64_t p) { return make(p, 1, 0, 0, 1); }
GroupElement GroupElement::genA(std::int64_t p) { return make(p, 0, -1, 1, 0); }
GroupElement GroupElement::genB(std::int64_t p) { return make(p, 0, 1, -1, 1); }
GroupElement GroupElement::genC(std::int64_t p) { return make(p, 1, 1, 0, 1); }

std::string GroupElement::str() const
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
           std::to_string(d) + ")";
}

GroupElement mul(const GroupElement& g, const GroupElement& h)
{
    check_same_p(g.p, h.p);
    return GroupElement::make(g.p, g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                              g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

GroupElement inverse(const GroupElement& g)
{
    return GroupElement::make(g.p, g.d, -g.b, -g.c, g.a);
}

std::int64_t order(const GroupElement& g)
{
    GroupElement acc = g;
    std::int64_t n = 1;
    // element orders in PSL(2,p) divide p, (p-1)/2, or (p+1)/2 up to a factor 2
    const std::int64_t cap = 2 * (g.p + 1);
    while (!acc.isIdentity()) {
        acc = mul(acc, g);
        if (++n > cap)
            throw std::logic_error("order exceeded bound; corrupt element");
    }
    return n;
}

GroupElement pow(const GroupElement& g, std::int64_t e)
{
    GroupElement acc = GroupElement::identity(g.p);
    GroupElement base = e >= 0 ? g : inverse(g);
    std::int64_t n = e >= 0 ? e : -e;
    while (n > 0) {
        if (n & 1)
            acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

std::vector<GroupElement> enumerate_group(const PrimeContext& ctx)
{
    const std::int64_t p = ctx.p();
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(p * (p * p - 1) / 2));
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c) {
                if (a != 0) {
                    // d is determined by ad - bc = 1
                    const std::int64_t d = ctx.reduce((1 + b * c) * ctx.inv(a));
                    GroupElement g = GroupElement::make(p, a, b, c, d);
                    if (g.a == a && g.b == b && g.c == c && g.d == d)
                        out.push_back(g); // keep canonical representatives only
                } else {
                    if (ctx.reduce(-b * c) != 1)
                        continue;
                    for (std::int64_t d = 0; d < p; ++d) {
                        GroupElement g = GroupElement::make(p, a, b, c, d);
                        if (g.a == a && g.b == b && g.c == c && g.d == d)
                            out.push_back(g);
                    }
                }
            }
    std::sort(out.begin(), out.end(),
              [](const GroupElement& l, const GroupElement& r) { return l.key() < r.key(); });
    return out;
}

std::vector<GroupElement> sample_elements(const std::vector<GroupElement>& group, int count,
                                          std::uint64_t seed)
{
    std::mt19937_64 engine(seed);
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(group[engine() % group.size()]);
    return out;
}

std::string ProjVertex::str() const
{
    return "[" + std::to_string(x) + ":" + std::to_string(y) + "]";
}

ProjVertex canonicalize(const PrimeContext& ctx, std::int64_t x, std::int64_t y)
{
    const std::int64_t p = ctx.p();
    x = ctx.reduce(x);
    y = ctx.reduce(y);
    if (x == 0 && y == 0)
        throw zero_vector_error("(0,0) does not represent a projective vertex");

    const std::int64_t half = ctx.halfOrder();
    ProjVertex v;
    v.p = p;
    if (y != 0) {
        if (y > half) {
            x = ctx.reduce(-x);
            y = p - y;
        }
        v.x = x;
        v.y = y;
        v.slot = 1 + static_cast<int>(ctx.reduce(x * ctx.inv(y)));
        v.level = static_cast<int>(ctx.dlog(y) % half);
    } else {
        if (x > half)
            x = p - x;
        v.x = x;
        v.y = 0;
        v.slot = 0;
        v.level = static_cast<int>(ctx.dlog(x) % half);
    }
    return v;
}

ProjVertex act(const PrimeContext& ctx, const GroupElement& g, const ProjVertex& v)
{
    check_same_p(g.p, v.p);
    check_same_p(g.p, ctx.p());
    return canonicalize(ctx, g.a * v.x + g.b * v.y, g.c * v.x + g.d * v.y);
}

int vertex_index(const PrimeContext& ctx, const ProjVertex& v)
{
    return v.slot * static_cast<int>(ctx.halfOrder()) + v.level;
}

ProjVertex vertex_at(const PrimeContext& ctx, int index)
{
    const int half = static_cast<int>(ctx.halfOrder());
    const int slot = index / half;
    const int level = index % half;
    const std::int64_t scale = mod_pow(ctx.primitiveRoot(), level, ctx.p());
    ProjVertex v = slot == 0 ? canonicalize(ctx, scale, 0)
                             : canonicalize(ctx, (slot - 1) * scale, scale);
    return v;
}

int vertex_count(const PrimeContext& ctx)
{
    return static_cast<int>((ctx.p() * ctx.p() - 1) / 2);
}

ProjVertex slot_representative(const PrimeContext& ctx, int slot)
{
    return slot == 0 ? canonicalize(ctx, 1, 0) : canonicalize(ctx, slot - 1, 1);
}

} // namespace klein
