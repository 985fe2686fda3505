"""
Semiring Engine - Configuration
Search caps, sampling grids and logging setup loaded from engine_config.json
"""

import json
import logging
import os
from fractions import Fraction
from typing import Dict, Any, List, Optional

CAP_ENV_VAR = "SEMIRING_ENGINE_CAP"
CONFIG_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "engine_config.json")

DEFAULT_SETTINGS: Dict[str, Any] = {
    'subset_cap': 65536,
    'materialize_cap': 4096,
    'seed': 20240601,
    'grid': ["0", "1", "-1", "2", "-2", "3", "-3", "1/2", "-1/2", "1/3", "-1/3"],
    'span_bound': 8,
    'group_support_cap': 2,
    'verify_grid': 96,
    'workers': 4,
    'log_level': "WARNING",
}

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class EngineConfig:
    """Engine settings: JSON file values layered over in-code defaults"""

    def __init__(self, config_file: Optional[str] = CONFIG_FILE):
        self.config_file = config_file
        self.load_settings()

    def load_settings(self):
        """Load engine settings, falling back to defaults for missing keys"""
        self.settings = dict(DEFAULT_SETTINGS)
        if self.config_file and os.path.exists(self.config_file):
            with open(self.config_file, 'r') as f:
                self.settings.update(json.load(f))
        env_cap = os.environ.get(CAP_ENV_VAR)
        if env_cap:
            self.settings['subset_cap'] = int(env_cap)

    def get(self, key: str, default: Any = None) -> Any:
        return self.settings.get(key, default)

    @property
    def subset_cap(self) -> int:
        return int(self.settings['subset_cap'])

    @property
    def materialize_cap(self) -> int:
        return int(self.settings['materialize_cap'])

    @property
    def seed(self) -> int:
        return int(self.settings['seed'])

    @property
    def span_bound(self) -> int:
        return int(self.settings['span_bound'])

    @property
    def group_support_cap(self) -> int:
        return int(self.settings['group_support_cap'])

    @property
    def verify_grid(self) -> int:
        return int(self.settings['verify_grid'])

    @property
    def workers(self) -> int:
        return int(self.settings['workers'])

    @property
    def grid(self) -> List[Fraction]:
        return [Fraction(v) for v in self.settings['grid']]

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.settings)


def setup_logging(level: Optional[str] = None):
    """Configure root logging once for CLI and API entry points"""
    level_name = (level or engine_config.get('log_level') or "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level_name, logging.WARNING), format=LOG_FORMAT)


# Global engine configuration instance
engine_config = EngineConfig()
