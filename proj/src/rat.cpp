#include "rsf/rat.hpp"

#include "rsf/errors.hpp"

namespace rsf {

Rat parse_rat(const std::string& s)
{
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw ValidationError("malformed rational '" + s + "'");
    if (r.get_den() == 0)
        throw ValidationError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& r)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& r)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

}  // namespace rsf
