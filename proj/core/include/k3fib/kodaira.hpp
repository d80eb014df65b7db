#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3fib {

enum class KodairaFamily { I, IStar, II, III, IV, IVStar, IIIStar, IIStar };

/// A Kodaira fibre type. I_n carries n >= 0, I_n* carries n >= 0; the other
/// families ignore n.
class KodairaType {
public:
    static KodairaType I(int n);
    static KodairaType IStar(int n);
    static KodairaType II() { return KodairaType(KodairaFamily::II, 0); }
    static KodairaType III() { return KodairaType(KodairaFamily::III, 0); }
    static KodairaType IV() { return KodairaType(KodairaFamily::IV, 0); }
    static KodairaType IVStar() { return KodairaType(KodairaFamily::IVStar, 0); }
    static KodairaType IIIStar() { return KodairaType(KodairaFamily::IIIStar, 0); }
    static KodairaType IIStar() { return KodairaType(KodairaFamily::IIStar, 0); }

    /// "I10", "I2*", "IV*", "III", ... Throws std::invalid_argument.
    static KodairaType parse(std::string_view text);

    KodairaFamily family() const { return family_; }
    int index() const { return n_; }
    std::string name() const;

    /// Number of irreducible components (dual-graph vertex count).
    int components() const;
    /// Euler number of the fibre = order of the discriminant.
    int euler() const;

    /// I_1, I_2, II, III: the fibres the finite-MW tables only count.
    bool is_small() const;

    /// Display order: II*, III*, IV*, I_n* (n descending), I_n (descending), IV, III, II.
    int display_rank() const;

    friend bool operator==(const KodairaType&, const KodairaType&) = default;
    friend std::strong_ordering operator<=>(const KodairaType& a, const KodairaType& b);

private:
    KodairaType(KodairaFamily f, int n) : family_(f), n_(n) {}
    KodairaFamily family_;
    int n_;
};

enum class JClass { Zero, Twelve28, Infinity, FiniteNonspecial };
std::string_view to_string(JClass j);

/// Allowed composition of a fibre on X: number of special components, of
/// simple special components and of simple ordinary components.
struct SpecialProfile {
    int specials = 0;
    int simple_specials = 0;
    int simple_ordinaries = 0;
    friend bool operator==(const SpecialProfile&, const SpecialProfile&) = default;
};

struct FiberTypeInfo {
    int euler = 0;
    /// Dual-graph vertex count, the m(P) used in Shioda-Tate.
    int components = 0;
    /// The published table's "number of components" column, kept verbatim; it
    /// disagrees with the dual graph for I_n (n+1) and I_0* (1).
    int table_components = 0;
    JClass j = JClass::FiniteNonspecial;
    /// Empty when the type cannot occur on X.
    std::vector<SpecialProfile> profiles;

    bool occurs_on_x() const { return !profiles.empty(); }
};

FiberTypeInfo type_info(KodairaType t);

/// The reducible types that can occur on X, in display order.
std::vector<KodairaType> reducible_types_on_x();

/// Renders a multiset like "I2* 2I0*" (display order, repeated types grouped).
std::string multiset_name(std::vector<KodairaType> types);
/// Canonical (display-ordered) copy.
std::vector<KodairaType> canonical(std::vector<KodairaType> types);

/// Extended Dynkin diagram of a fibre type with its Kodaira multiplicities
/// and the special/ordinary colourings allowed on X.
struct AffineDiagram {
    KodairaType type;
    /// Intersection matrix of the components (diagonal -2, or 0 for the
    /// irreducible singular fibres I_1 and II).
    std::vector<std::vector<int>> gram;
    std::vector<int> multiplicities;
    /// Each mask marks the special components of one admissible colouring.
    std::vector<std::vector<bool>> special_masks;

    int size() const { return static_cast<int>(multiplicities.size()); }
};

/// Throws std::invalid_argument for I_0 (smooth fibre).
AffineDiagram affine_diagram(KodairaType t);

} // namespace k3fib
