"""Material presets from key=value configuration lines"""

import logging
import os
from pathlib import Path
from typing import Dict, Iterable, Optional, Union

from ..errors import ConfigurationError, DomainError
from .material import BUILTIN_MATERIALS, Material

LOGGER = logging.getLogger(__name__)

MATERIALS_ENV = 'MATTERWAVE_MATERIALS'

_KEYS = ('name', 'mu0_eV', 'Ep_eV')


def to_config_line(material: Material) -> str:
    """Format a material as a configuration line.

    Args:
        material (Material): The material.

    Returns:
        str: A line like "name=Al;mu0_eV=11.7;Ep_eV=15.0".
    """
    return f'name={material.name};mu0_eV={material.mu0_ev!r};Ep_eV={material.ep_ev!r}'


def parse_material(line: str, line_number: Optional[int] = None) -> Material:
    """Parse a configuration line.

    Args:
        line (str): The line.
        line_number (Optional[int], optional): The line number for error
            messages. Defaults to None.

    Raises:
        ConfigurationError: If a key is unknown, repeated or missing, or a
            value is invalid.

    Returns:
        Material: The material.
    """
    values: Dict[str, str] = {}
    for item in line.split(';'):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition('=')
        key = key.strip()
        if not sep:
            raise ConfigurationError(f'expected key=value, got "{item}"', line_number)
        if key not in _KEYS:
            raise ConfigurationError(f'unknown key "{key}"', line_number)
        if key in values:
            raise ConfigurationError(f'duplicate key "{key}"', line_number)
        values[key] = value.strip()

    missing = [key for key in _KEYS if key not in values]
    if missing:
        raise ConfigurationError(f'missing {", ".join(missing)}', line_number)

    try:
        return Material(values['name'], float(values['mu0_eV']), float(values['Ep_eV']))
    except (ValueError, DomainError) as error:
        raise ConfigurationError(str(error), line_number) from error


def parse_materials(lines: Iterable[str]) -> Dict[str, Material]:
    """Parse the lines of a material configuration.

    Blank lines and lines starting with "#" are ignored.

    Args:
        lines (Iterable[str]): The lines.

    Returns:
        Dict[str, Material]: The materials keyed by name.
    """
    materials: Dict[str, Material] = {}
    for line_number, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        material = parse_material(line, line_number)
        if material.name in materials:
            raise ConfigurationError(f'material "{material.name}" defined twice', line_number)
        materials[material.name] = material
    return materials


def load_materials(path: Optional[Union[str, Path]] = None) -> Dict[str, Material]:
    """Load the built in materials together with those from a file.

    Args:
        path (Optional[Union[str, Path]], optional): The configuration file.
            Defaults to the file named by MATTERWAVE_MATERIALS, if set.

    Raises:
        ConfigurationError: If the file cannot be read or is malformed.

    Returns:
        Dict[str, Material]: The materials keyed by name.
    """
    materials = dict(BUILTIN_MATERIALS)
    if path is None:
        path = os.environ.get(MATERIALS_ENV) or None
    if path is None:
        return materials

    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise ConfigurationError(f'cannot read {path}: {error.strerror}') from error

    loaded = parse_materials(text.splitlines())
    LOGGER.debug('loaded %d materials from %s', len(loaded), path)
    materials.update(loaded)
    return materials
