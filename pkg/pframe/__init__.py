from .errors import *

from .frames import *
from .walsh import *
from .dilation import *
