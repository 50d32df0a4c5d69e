from .exact import *

from .sampling import *

from .distances import *

from .shapley_dist import *

from .gaussian import *
