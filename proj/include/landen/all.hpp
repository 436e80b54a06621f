#pragma once

#include "landen/cyclotomic.hpp"
#include "landen/elimination.hpp"
#include "landen/errors.hpp"
#include "landen/integer.hpp"
#include "landen/jacobian.hpp"
#include "landen/landen.hpp"
#include "landen/matrix.hpp"
#include "landen/multipoly.hpp"
#include "landen/parallel.hpp"
#include "landen/prime_field.hpp"
#include "landen/random.hpp"
#include "landen/ratfunc.hpp"
#include "landen/report.hpp"
#include "landen/resultant.hpp"
#include "landen/serialize.hpp"
#include "landen/symfun.hpp"
#include "landen/upoly.hpp"
