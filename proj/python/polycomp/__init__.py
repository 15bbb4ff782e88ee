#
# Copyright 2026 The polycomp Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Polynomial composites, monoid domains and toy ciphers.

Thin re-export of the compiled ``_polycomp`` extension. Values are passed as
text, e.g. ``poly_factor("F2:[1,0,1]")`` returns ``"unit=1 [1,1]^2"``.
"""

from ._polycomp import *  # noqa: F401,F403
from ._polycomp import PolycompError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
