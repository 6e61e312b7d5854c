/**
 * Exception hierarchy shared by every lapgap module.
 *
 * InputError covers malformed or out-of-range arguments, DomainError a
 * well-formed request for a quantity that does not exist (e.g. the gap in a
 * dimension with no faces), IntegrityError a disagreement between two
 * independent computations that must agree, ContractError a violated
 * precondition on a numerical input, and SizeError a refusal to build an
 * operator above the dense size cap.
 */

#ifndef LAPGAP_ERROR_HPP
#define LAPGAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lapgap {

class Error : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

class InputError : public Error
{
    public:
        using Error::Error;
};

class DomainError : public Error
{
    public:
        using Error::Error;
};

class IntegrityError : public Error
{
    public:
        using Error::Error;
};

class ContractError : public Error
{
    public:
        using Error::Error;
};

class SizeError : public InputError
{
    public:
        using InputError::InputError;
};

}   // namespace lapgap

#endif
