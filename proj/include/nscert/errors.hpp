#pragma once

#include <stdexcept>
#include <string>

namespace nscert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define NSCERT_DEFINE_ERROR(Name)                                                                  \
    struct Name : Error {                                                                          \
        using Error::Error;                                                                        \
    }

NSCERT_DEFINE_ERROR(ZeroParameter);
NSCERT_DEFINE_ERROR(LabelOutOfRange);
NSCERT_DEFINE_ERROR(DimensionCap);
NSCERT_DEFINE_ERROR(ScenarioMismatch);
NSCERT_DEFINE_ERROR(InvalidBox);
NSCERT_DEFINE_ERROR(InvalidMode);
NSCERT_DEFINE_ERROR(EmptyGenerators);
NSCERT_DEFINE_ERROR(NotAClique);
NSCERT_DEFINE_ERROR(NotSymmetric);
NSCERT_DEFINE_ERROR(Diverged);
NSCERT_DEFINE_ERROR(DimensionMismatch);
NSCERT_DEFINE_ERROR(NotAProjection);
NSCERT_DEFINE_ERROR(IncompletePVM);
NSCERT_DEFINE_ERROR(RankTooHigh);
NSCERT_DEFINE_ERROR(Unclassifiable);
NSCERT_DEFINE_ERROR(SolverUndecided);
NSCERT_DEFINE_ERROR(HypothesisFailed);
NSCERT_DEFINE_ERROR(NotGenuine);
NSCERT_DEFINE_ERROR(SearchExhausted);
NSCERT_DEFINE_ERROR(IoError);
NSCERT_DEFINE_ERROR(SchemaError);

#undef NSCERT_DEFINE_ERROR

} // namespace nscert
