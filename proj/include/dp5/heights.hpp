#pragma once

#include <array>
#include <string>
#include <vector>

#include "dp5/types.hpp"

namespace dp5 {

// c11 Y1^2 + c22 Y2^2 + c33 Y3^2 + c12 Y1Y2 + c13 Y1Y3 + c23 Y2Y3
struct QuadraticForm {
    std::array<Integer, 6> c;  // c11, c22, c33, c12, c13, c23

    QuadraticForm() = default;
    QuadraticForm(long c11, long c22, long c33, long c12, long c13, long c23);
    explicit QuadraticForm(const std::array<Integer, 6>& coeffs) : c(coeffs) {}

    Integer operator()(const Integer& y1, const Integer& y2, const Integer& y3) const;

    // P(0,0,1) = 0 and P(1,1,1) = 0
    bool vanishes_at_p3_p4() const;

    // Coordinates in the basis Y1(Y2-Y3), Y2(Y1-Y3), Y1(Y1-Y2), Y2(Y1-Y2).
    // They are integers whenever the form vanishes at p3 and p4.
    std::array<Integer, 4> basis_coordinates() const;

    bool operator==(const QuadraticForm& o) const = default;
};

enum class HeightSetId { P1, P2, P3, Custom };

std::string to_string(HeightSetId id);
HeightSetId height_set_id_from_string(const std::string& s);

class HeightSet {
public:
    // Built-in sets. Custom is rejected here.
    static HeightSet builtin(HeightSetId id);
    static HeightSet p1() { return builtin(HeightSetId::P1); }
    static HeightSet p2() { return builtin(HeightSetId::P2); }
    static HeightSet p3() { return builtin(HeightSetId::P3); }

    // Validates vanishing at p3, p4 and rank 4; throws std::invalid_argument otherwise.
    static HeightSet custom(std::vector<QuadraticForm> forms);

    HeightSetId id() const { return id_; }
    std::string name() const { return to_string(id_); }
    const std::vector<QuadraticForm>& forms() const { return forms_; }
    const Integer& kappa() const { return kappa_; }
    // Bound for the largest log-anticanonical monomial in units of this height.
    const Integer& kappa_monomial() const { return kappa_mono_; }
    const std::vector<std::array<Integer, 4>>& basis_coordinates() const { return coords_; }

    // Stable key for caches: id for built-ins, coefficient listing for custom sets.
    std::string cache_key() const;

private:
    HeightSet(HeightSetId id, std::vector<QuadraticForm> forms);

    HeightSetId id_{HeightSetId::Custom};
    std::vector<QuadraticForm> forms_;
    std::vector<std::array<Integer, 4>> coords_;
    Integer kappa_;
    Integer kappa_mono_;
};

// The four basis forms and the ten forms whose lifts are the monomials of log-anticanonical degree.
std::vector<QuadraticForm> p1_forms();
std::vector<QuadraticForm> p2_forms();
std::vector<QuadraticForm> p3_forms();

Integer eval_form(const QuadraticForm& P, const ProjectivePoint& y);

// gcd(y1,y2) gcd(y1-y2, y1-y3)
Integer finite_height_denominator(const ProjectivePoint& y);

bool gcd_identity_check(const HeightSet& ps, const ProjectivePoint& y);

Rational height_projective(const HeightSet& ps, const ProjectivePoint& y);

Integer lift_ptilde(const QuadraticForm& P, const CoxTuple& a);

Integer height_cox(const HeightSet& ps, const CoxTuple& a);

// Smallest integer k with max_{P1}|P| <= k max_{ps}|P| via minimal coefficient sums.
Integer comparison_constant(const HeightSet& ps);

// The same bound with an arbitrary list of target forms in place of P1.
Integer comparison_constant(const std::vector<QuadraticForm>& targets,
                            const std::vector<QuadraticForm>& forms);

}  // namespace dp5
