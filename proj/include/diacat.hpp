#ifndef DIACAT_HPP_
#define DIACAT_HPP_

#include "diacat/decat.hpp"
#include "diacat/diagram.hpp"
#include "diacat/dsl.hpp"
#include "diacat/error.hpp"
#include "diacat/evalmodel.hpp"
#include "diacat/frobenius.hpp"
#include "diacat/matrix.hpp"
#include "diacat/normalform.hpp"
#include "diacat/permutation.hpp"
#include "diacat/presentation.hpp"
#include "diacat/rewrite.hpp"
#include "diacat/scalar.hpp"
#include "diacat/signature.hpp"

#endif  // DIACAT_HPP_
