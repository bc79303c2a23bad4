#ifndef STRATACONES_CONE_HPP
#define STRATACONES_CONE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratacones/classes.hpp"
#include "stratacones/rational.hpp"

namespace strata {

// Finitely generated cone in the space of numerical 2-cycle classes.
struct ConeSpec {
    std::string name; // "V2" | "V2KV" | "V2KVCT" | custom
    std::vector<CycleClass> generators;

    // The 420 stratum classes.
    static const ConeSpec& v2();
    // The 420 stratum classes plus the 315 Keel-Vermeire lifts.
    static const ConeSpec& v2kv();
    // V2KV plus the supplied embedded-blow-up surface classes.
    static ConeSpec v2kvct(const std::vector<CycleClass>& surfaces);
    static ConeSpec custom(std::string name, std::vector<CycleClass> generators);
};

// Linear functional proving non-membership: nonnegative on every generator,
// negative on the target. Stored in raw 420-coordinates (primitive integer
// vector) so verification does not depend on any basis choice.
struct FarkasCertificate {
    std::vector<Rat> functional; // length 420
    std::string cone;
};

// Exactly one branch is present: nonnegative combination coefficients
// (indexed by generator) when the target is in the cone, otherwise a
// verified Farkas certificate.
struct MembershipResult {
    std::optional<std::map<int, Rat>> coefficients;
    std::optional<FarkasCertificate> certificate;

    bool member() const { return coefficients.has_value(); }
};

// Indices of 127 class representatives whose class vectors span the full
// pairing lattice (greedy first-independent selection).
const std::vector<int>& gram_basis();

// Coordinates of v as a rational combination of the 127 basis class
// vectors, or nullopt when v does not lie in their span (an "inconsistent"
// input that is not a numerical class vector).
std::optional<std::vector<Rat>> reduce_to_basis(const CycleClass& v);

// Decides whether v = sum lambda_g g with lambda >= 0 has an exact rational
// solution, by phase-1 simplex on the basis-restricted equality system.
// Throws std::invalid_argument ("inconsistent-input") when v fails
// reduce_to_basis. The zero target is a member with no coefficients.
MembershipResult membership(const CycleClass& v, const ConeSpec& cone);

// Independent exact recheck of a certificate against target and cone.
bool verify_certificate(const CycleClass& v, const ConeSpec& cone, const FarkasCertificate& cert);

// Membership of generator g in the cone spanned by the other generators
// (excluding positive multiples of g). Non-membership means g is extremal
// and carries a Farkas certificate for that fact.
MembershipResult extremal_result(int g, const ConeSpec& cone);

// True iff generator g is not in the cone spanned by the other generators
// (excluding positive multiples of g). Extremality within the finitely
// generated cone only; extremality in the full effective cone is open.
bool extremal_in_cone(int g, const ConeSpec& cone);

// Exact recheck that cert proves generator g extremal: nonnegative on every
// other generator (positive multiples of g excluded), negative on g itself.
// Works directly on the cone, without materializing the punctured cone.
bool verify_extremality(int g, const ConeSpec& cone, const FarkasCertificate& cert);

// Image of a certificate under the class action of g: if cert separates v
// from a cone with an S7-stable generator set, the transported certificate
// separates g * v. It must still be re-verified against the concrete cone;
// transport is a constructor, not a proof.
FarkasCertificate transport_certificate(const Perm& g, const FarkasCertificate& cert);

} // namespace strata

#endif // STRATACONES_CONE_HPP
