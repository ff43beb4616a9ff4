import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    """Base configuration"""
    # Simulation defaults
    DEFAULT_RULE: int = int(os.getenv('DEFAULT_RULE', 110))
    DEFAULT_WIDTH: int = int(os.getenv('DEFAULT_WIDTH', 65900))
    DEFAULT_DENSITY: float = float(os.getenv('DEFAULT_DENSITY', 0.5))
    # Seed of the PCG64 generator; recorded in every artifact
    DEFAULT_SEED: int = int(os.getenv('DEFAULT_SEED', 20120601))
    DEFAULT_STEPS: int = int(os.getenv('DEFAULT_STEPS', 2000))
    DEFAULT_STRIDE: int = int(os.getenv('DEFAULT_STRIDE', 1))

    # Analysis
    SMOOTHING_PERIOD: int = int(os.getenv('SMOOTHING_PERIOD', 100))
    REPRODUCE_SECTIONS: int = int(os.getenv('REPRODUCE_SECTIONS', 20))
    REPRODUCE_STEPS: int = int(os.getenv('REPRODUCE_STEPS', 50000))
    # Detail parts of section 14, as START:LEN pairs
    DETAIL_REGIONS: str = os.getenv('DETAIL_REGIONS', '46000:1100,47100:1100,48200:1100')
    DETAIL_FROM: int = int(os.getenv('DETAIL_FROM', 10000))
    DETAIL_TO: int = int(os.getenv('DETAIL_TO', 50000))
    MIN_DROP: float = float(os.getenv('MIN_DROP', 0.1))

    # Cyclic tag systems
    CTS_MAX_STEPS: int = int(os.getenv('CTS_MAX_STEPS', 1000000))
    CTS_TRACE_SYMBOL_CAP: int = int(os.getenv('CTS_TRACE_SYMBOL_CAP', 1000000))

    # Ether search
    ETHER_SEARCH_BOUND: int = int(os.getenv('ETHER_SEARCH_BOUND', 20))
    ETHER_TILE_REPEATS: int = int(os.getenv('ETHER_TILE_REPEATS', 3))

    # Output and execution
    PLOT_MAX_SEGMENTS: int = int(os.getenv('PLOT_MAX_SEGMENTS', 4000))
    WORKERS: int = int(os.getenv('WORKERS', 1))
    ROW_BATCH_SIZE: int = int(os.getenv('ROW_BATCH_SIZE', 256))
    PROGRESS_EVERY: int = int(os.getenv('PROGRESS_EVERY', 1000))
    LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'INFO')
    OUTPUT_DIR: str = os.getenv('OUTPUT_DIR', 'output')


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG: bool = True
    ECA_ENV: str = 'development'
    LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'DEBUG')


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG: bool = False
    ECA_ENV: str = 'production'


class TestConfig(Config):
    """Test configuration - sequential evaluation, quiet logs"""
    DEBUG: bool = False
    ECA_ENV: str = 'test'
    WORKERS: int = 1
    LOG_LEVEL: str = 'WARNING'


def get_config() -> Config:
    """Get configuration based on environment"""
    env = os.getenv('ECA_ENV', 'development')

    if env == 'production':
        return ProductionConfig()

    if env == 'test':
        return TestConfig()

    return DevelopmentConfig()
