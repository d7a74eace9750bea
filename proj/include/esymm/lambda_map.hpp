#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esymm/curvature.hpp"
#include "esymm/matrix.hpp"
#include "esymm/symp_space.hpp"

namespace esymm {

/// Structure constants B^k_{ij}, stored as b[i](k, j) so that the normal
/// operator for index i is the matrix b[i] acting on frame coordinates.
struct BStruct {
    std::vector<Mat> ops; // 2p matrices, each 2p x 2p

    const Rational& coeff(std::size_t k, std::size_t i, std::size_t j) const {
        return ops[i].at(k, j);
    }
};

/// Defining data of the construction: 2p shape operators C_i in sp of the
/// tangent block, together with the normal frame they refer to.  The frame
/// columns are coordinates of the frame vectors f_i inside the normal block
/// (identity frame by default); gram is their pairwise Omega-pairing.
class ShapeFamily {
public:
    ShapeFamily(SympSpace space, std::vector<Mat> c_ops,
                std::optional<BStruct> b_struct = std::nullopt,
                Mat frame = Mat());

    const SympSpace& space() const { return space_; }
    std::size_t n() const { return space_.n(); }
    std::size_t p() const { return space_.p(); }
    const std::vector<Mat>& C() const { return c_; }
    const Mat& frame() const { return frame_; }
    const Mat& gram() const { return gram_; }
    const Mat& gram_inv() const { return gram_inv_; }
    const std::optional<BStruct>& b_struct() const { return b_struct_; }
    bool has_b_struct() const { return b_struct_.has_value(); }

    /// Frame vector f_i as an ambient vector.
    Vec frame_vector(std::size_t i) const;
    /// Frame-coordinate vector to ambient normal part.
    Vec frame_to_ambient(const Vec& u) const;
    /// Ambient vector's normal part expressed in frame coordinates.
    Vec ambient_to_frame(const Vec& z) const;

    /// True when every product C_i C_j vanishes.
    bool products_zero() const;

private:
    SympSpace space_;
    std::vector<Mat> c_;
    Mat frame_;     // 2p x 2p, columns = frame vectors in normal-block coords
    Mat gram_;      // gram_{ij} = Omega(f_i, f_j)
    Mat gram_inv_;
    std::optional<BStruct> b_struct_;
};

/// The linear map Lambda: tangent block -> sp(ambient) assembled from the
/// shape operators, cached on the tangent basis.
class LambdaMap {
public:
    static LambdaMap build(ShapeFamily family);

    const ShapeFamily& family() const { return fam_; }
    const SympSpace& space() const { return fam_.space(); }
    const Mat& of_basis(std::size_t alpha) const { return images_[alpha]; }
    /// Lambda(x) for a tangent-block vector x, by linearity.
    Mat of(const Vec& x) const;

private:
    LambdaMap(ShapeFamily fam, std::vector<Mat> images)
        : fam_(std::move(fam)), images_(std::move(images)) {}
    ShapeFamily fam_;
    std::vector<Mat> images_;
};

/// Outcome of a single algebraic condition check.  pass is the headline
/// verdict; on failure the offending basis tuple and residual are kept.
struct ConditionReport {
    bool pass = true;
    std::vector<std::size_t> failed_tuple;
    std::string residual;
    std::string detail;
};

/// S0 Lambda(x) S0 = -Lambda(x) on every tangent basis vector.
ConditionReport check_condition_1(const LambdaMap& lm);
/// Lambda(x) y = Lambda(y) x on every tangent basis pair.
ConditionReport check_condition_2(const LambdaMap& lm);
/// Lambda([Lambda(x), Lambda(y)] z) = [[Lambda(x), Lambda(y)], Lambda(z)]
/// on every basis triple, evaluated both through Lambda and through the
/// equivalent shape-operator contraction; the two verdicts must agree.
ConditionReport check_condition_3(const LambdaMap& lm);

/// Raw variants over explicit basis images (for corrupted-input tests).
ConditionReport check_condition_1_images(const SympSpace& space, const std::vector<Mat>& images);
ConditionReport check_condition_2_images(const SympSpace& space, const std::vector<Mat>& images);
ConditionReport check_condition_3_lambda_form(const SympSpace& space, const std::vector<Mat>& images);
ConditionReport check_condition_3_c_form(const ShapeFamily& family);

/// Second fundamental form alpha_0(x, y) = Lambda(y) x, in frame coordinates
/// of the normal block.
Vec second_fundamental_form(const LambdaMap& lm, const Vec& x, const Vec& y);

/// Curvature at the base point, computed through the commutator formula and
/// through the shape-operator sum; disagreement throws InternalCheckError.
CurvatureTensor curvature_at_base(const LambdaMap& lm);

/// The element (1/2) sum_{ij} gram^{-1}_{ij} C_i ^ C_j of Lambda^2 sp pushed
/// through phi; equals curvature_at_base exactly.
CurvatureTensor curvature_via_phi(const LambdaMap& lm);

/// (1/2) sum_{ij} gram^{-1}_{ij} [C_i, C_j], the bracket image of the same
/// element; ricci of the base curvature equals -omega0(this ., .).
Mat psi_of_curvature_element(const LambdaMap& lm);

/// Spanning set of the reconstruction algebra: the 2n elements
/// (Lambda(e_a), e_a) plus the pairwise commutators ([., .], 0); bracket
/// closure is verified by exact rank computation.
struct GroupAlgebra {
    std::vector<AffineSympElement> spanning;
    bool closed = true;
    std::pair<std::size_t, std::size_t> failed_pair{0, 0};
    /// Length of the lower central series until it reaches zero, or -1 if it
    /// stabilizes at a nonzero algebra.
    int nilpotency_class = 0;
};
GroupAlgebra lambda_group_algebra(const LambdaMap& lm);

} // namespace esymm
