#pragma once

#include "entwine/catalog.hpp"
#include "entwine/criteria.hpp"
#include "entwine/errors.hpp"
#include "entwine/field.hpp"
#include "entwine/matrix.hpp"
#include "entwine/representations.hpp"
#include "entwine/serialize.hpp"
#include "entwine/structures.hpp"
#include "entwine/tensor.hpp"
