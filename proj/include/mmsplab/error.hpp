/**@file
 *****************************************************************************
 Error codes and the exception type shared by every mmsplab module.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_ERROR_HPP_
#define MMSPLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mmsplab {

/** Machine-readable failure categories. The CLI maps these to exit codes. */
enum class Errc {
    NotPrime,
    ReduciblePolynomial,
    DivisionByZero,
    NoTower,
    TowerTooShallow,
    CtxMismatch,
    DimensionMismatch,
    OddLength,
    IndexOutOfRange,
    TooManyColumns,
    NotSelfOrthogonal,
    RankDeficient,
    BadThreshold,
    ClassInvariantViolated,
    OutOfRange,
    ConstructionFailedVerification,
    NotQualified,
    TooLarge,
    BadIndex,
    NonPrimeLocalDim,
    NotMaximalIsotropic,
    NoFixedVector,
    IncompletePovm,
    BadRegisters,
    ClassMismatch,
    NotAState,
    NonStandardQuery,
    ParseError,
};

inline const char* errc_name(Errc e)
{
    switch (e) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NoTower: return "NoTower";
    case Errc::TowerTooShallow: return "TowerTooShallow";
    case Errc::CtxMismatch: return "CtxMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::OddLength: return "OddLength";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooManyColumns: return "TooManyColumns";
    case Errc::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::BadThreshold: return "BadThreshold";
    case Errc::ClassInvariantViolated: return "ClassInvariantViolated";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ConstructionFailedVerification: return "ConstructionFailedVerification";
    case Errc::NotQualified: return "NotQualified";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadIndex: return "BadIndex";
    case Errc::NonPrimeLocalDim: return "NonPrimeLocalDim";
    case Errc::NotMaximalIsotropic: return "NotMaximalIsotropic";
    case Errc::NoFixedVector: return "NoFixedVector";
    case Errc::IncompletePovm: return "IncompletePovm";
    case Errc::BadRegisters: return "BadRegisters";
    case Errc::ClassMismatch: return "ClassMismatch";
    case Errc::NotAState: return "NotAState";
    case Errc::NonStandardQuery: return "NonStandardQuery";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/** Exception carrying an Errc plus a human-readable detail string. */
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code)
    {
    }
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

inline void require(bool cond, Errc code, const std::string& detail)
{
    if (!cond) fail(code, detail);
}

} // namespace mmsplab

#endif // MMSPLAB_ERROR_HPP_
