#pragma once
#include <stdexcept>
#include <string>

namespace etaforge {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ETAFORGE_ERROR(Name)                                          \
    struct Name : Error {                                             \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

ETAFORGE_ERROR(DivisionByZeroSeries);
ETAFORGE_ERROR(NonUnitLeadingCoefficient);
ETAFORGE_ERROR(OffsetMismatch);
ETAFORGE_ERROR(ConstantTermPresent);
ETAFORGE_ERROR(NonIntegerExponent);
ETAFORGE_ERROR(InsufficientTruncation);
ETAFORGE_ERROR(DivisionByZero);
ETAFORGE_ERROR(UnsplitDenominator);
ETAFORGE_ERROR(LogTermPresent);
ETAFORGE_ERROR(PoleAtExpansionPoint);
ETAFORGE_ERROR(NonIntegralParams);
ETAFORGE_ERROR(NonInvertibleComposition);
ETAFORGE_ERROR(NoPassingMultiplier);
ETAFORGE_ERROR(NotIntegrableAtZero);
ETAFORGE_ERROR(ToleranceNotMet);
ETAFORGE_ERROR(QuartetViolatesRelation);

#undef ETAFORGE_ERROR

} // namespace etaforge
