#pragma once

#include <stdexcept>
#include <string>

namespace qact {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QACT_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                              \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

QACT_DEFINE_ERROR(DimensionMismatch);
QACT_DEFINE_ERROR(NonFiniteInput);
QACT_DEFINE_ERROR(NotSemisimple);
QACT_DEFINE_ERROR(NotAGroup);
QACT_DEFINE_ERROR(NoInvariantState);
QACT_DEFINE_ERROR(NonUniqueInvariantState);
QACT_DEFINE_ERROR(HaarNotPositive);
QACT_DEFINE_ERROR(GramSingular);
QACT_DEFINE_ERROR(AlgebraMismatch);
QACT_DEFINE_ERROR(QNotIntertwining);
QACT_DEFINE_ERROR(QNotPositive);
QACT_DEFINE_ERROR(NotIrreducible);
QACT_DEFINE_ERROR(DecompositionUnstable);
QACT_DEFINE_ERROR(IncompleteIrreducibleList);
QACT_DEFINE_ERROR(NotHomogeneous);
QACT_DEFINE_ERROR(ModularSolveFailed);
QACT_DEFINE_ERROR(CertificateDisagreement);
QACT_DEFINE_ERROR(NonIntegerMultiplicity);
QACT_DEFINE_ERROR(NoCharacter);
QACT_DEFINE_ERROR(NotATorsor);
QACT_DEFINE_ERROR(ModuleAxiomViolation);
QACT_DEFINE_ERROR(IsoResidualExceeded);
QACT_DEFINE_ERROR(CocycleInvalid);
QACT_DEFINE_ERROR(NotOrthogonalType);
QACT_DEFINE_ERROR(NotConnected);
QACT_DEFINE_ERROR(PerronFailure);
QACT_DEFINE_ERROR(ParamOutOfRange);
QACT_DEFINE_ERROR(DeltaMismatch);
QACT_DEFINE_ERROR(NegativeEntry);
QACT_DEFINE_ERROR(InvalidInput);
QACT_DEFINE_ERROR(InternalError);

#undef QACT_DEFINE_ERROR

} // namespace qact
