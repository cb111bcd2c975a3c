#ifndef HFORGE_HFORGE_HPP
#define HFORGE_HFORGE_HPP

#include "certificate.hpp"
#include "cover_shape.hpp"
#include "degeneration.hpp"
#include "errors.hpp"
#include "hurwitz_tuple.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "random.hpp"
#include "search.hpp"
#include "tuple_io.hpp"
#include "wreath.hpp"

#endif // HFORGE_HFORGE_HPP
