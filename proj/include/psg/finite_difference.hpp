#pragma once

#include <psg/signature.hpp>

#include <type_traits>

namespace psg {

template <typename F>
using field_value_t = std::decay_t<std::invoke_result_t<const F&, const Vector&>>;

/// (f(u + h e_axis) - f(u - h e_axis)) / 2h for any vector-space valued f.
template <typename F>
auto central_difference(const F& f, const Vector& u, int axis, double h)
{
    Vector up = u;
    Vector down = u;
    up[axis] += h;
    down[axis] -= h;
    using T = field_value_t<F>;
    T d = f(up) - f(down);
    return T((1.0 / (2.0 * h)) * d);
}

/// Central difference with one Richardson level: (4 D(h/2) - D(h)) / 3.
template <typename F>
auto richardson_derivative(const F& f, const Vector& u, int axis, double h)
{
    using T = field_value_t<F>;
    const T coarse = central_difference(f, u, axis, h);
    const T fine = central_difference(f, u, axis, h / 2);
    return T((4.0 / 3.0) * fine - (1.0 / 3.0) * coarse);
}

/// Second partial d_a d_b f by central differences at step h.
template <typename F>
auto second_difference(const F& f, const Vector& u, int a, int b, double h)
{
    using T = field_value_t<F>;
    if (a == b) {
        Vector up = u;
        Vector down = u;
        up[a] += h;
        down[a] -= h;
        T d = f(up) - 2.0 * f(u) + f(down);
        return T((1.0 / (h * h)) * d);
    }
    auto at = [&](double sa, double sb) {
        Vector p = u;
        p[a] += sa * h;
        p[b] += sb * h;
        return T(f(p));
    };
    T d = at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1);
    return T((1.0 / (4.0 * h * h)) * d);
}

/// Second partial with one Richardson level.
template <typename F>
auto richardson_second(const F& f, const Vector& u, int a, int b, double h)
{
    using T = field_value_t<F>;
    const T coarse = second_difference(f, u, a, b, h);
    const T fine = second_difference(f, u, a, b, h / 2);
    return T((4.0 / 3.0) * fine - (1.0 / 3.0) * coarse);
}

} // namespace psg
