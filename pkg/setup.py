from setuptools import setup, find_packages

setup(
    name="polyrep",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.26",
        "python-dotenv>=1.2.1",
        "tqdm>=4.67.1",
    ],
    extras_require={
        "test": ["pytest>=8.0"],
    },
    entry_points={
        "console_scripts": [
            "polyrep=polyrep.main:main",
            "polyrep-construct=polyrep.cli.construct:main",
            "polyrep-verify=polyrep.cli.verify:main",
        ],
    },
)
