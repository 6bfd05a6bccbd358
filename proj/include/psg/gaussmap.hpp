#pragma once

#include <psg/curvature.hpp>
#include <psg/multivector.hpp>

#include <functional>
#include <string>

namespace psg {

///
/// u -> multivector field over the chart domain. Fields built from an
/// Immersion keep a reference to it.
///
struct MultivectorField
{
    std::string label;
    std::function<MultivectorD(const Vector&)> eval;

    MultivectorD operator()(const Vector& u) const { return eval(u); }
};

/// x ^ e_1 ^ ... ^ e_n from the tangent part of the frame.
MultivectorD gauss_map(const Signature& sig, const AdaptedFrame& frame);

/// Same without completing a normal frame.
MultivectorD gauss_map(const Immersion& imm, const Vector& u);

MultivectorField gauss_map_field(const Immersion& imm);

///
/// e_i(nu) = sum_k sum_r eps_r h^r_ik x ^ e_1 ^ .. (e_r in slot k) .. ^ e_n,
/// r over the sphere normals.
///
MultivectorD gauss_map_derivative(const Signature& sig, const AdaptedFrame& frame, const SecondForm& h, int i);

/// e_i(nu) from central differences of the Gauss map along the chart axes.
MultivectorD gauss_map_derivative_numeric(const Immersion& imm, const AdaptedFrame& frame, int i, double step = 1e-4);

///
/// Closed form of the Laplacian:
///   |hhat|^2 nu + n Hhat ^ e_1 ^ .. ^ e_n - n sum_k x ^ .. (D_{e_k} Hhat in slot k) ..
///   + sum_{j != k} sum_{r < s} eps_r eps_s R^r_{sjk} x ^ .. (e_r in slot j) .. (e_s in slot k) ..
///
MultivectorD laplacian_formula(const Signature& sig, const GeometryReport& rep);
MultivectorD laplacian_formula(const Immersion& imm, const Vector& u);

MultivectorField laplacian_formula_field(const Immersion& imm);

///
/// Chart Laplace-Beltrami operator with the geometer's sign,
///   Delta phi = -g^{ab} (d_a d_b phi - Gamma^c_ab d_c phi),
/// derivatives of phi by central differences with one Richardson level and
/// the Christoffel symbols from the chart jet. Works for indefinite g.
///
MultivectorD laplace_beltrami_numeric(const Immersion& imm, const MultivectorField& field, const Vector& u, double step = 1e-3);

/// Scalar version, for tests.
double laplace_beltrami_numeric(const Immersion& imm, const std::function<double(const Vector&)>& f, const Vector& u, double step = 1e-3);

/// Sign of det[e_1 .. e_n, e_{n+1}, x] fixed at the domain center.
int companion_orientation(const Immersion& imm);

/// Adapted frame of a hypersurface with e_{n+1} oriented by `orientation`.
AdaptedFrame oriented_hypersurface_frame(const Immersion& imm, const Vector& u, int orientation);

/// e_{n+1} ^ e_1 ^ .. ^ e_n
MultivectorD companion(const Signature& sig, const AdaptedFrame& frame);

MultivectorField companion_field(const Immersion& imm);

/// n alpha_hat nu + n e_{n+1} ^ e_1 ^ .. ^ e_n, with the companion orientation.
MultivectorD laplacian_companion(const Immersion& imm, const Vector& u);

/// Delta(Delta nu): numeric Laplace-Beltrami of the closed-form Laplacian field.
MultivectorD bilaplacian(const Immersion& imm, const Vector& u, double step = 5e-3);

/// As `bilaplacian`, restricted to hypersurfaces.
MultivectorD bilaplacian_hypersurface(const Immersion& imm, const Vector& u, double step = 5e-3);

} // namespace psg
