from setuptools import setup, find_packages

def get_requirements():
    with open("requirements.txt", "r") as f:
        return [
            line.strip().replace('==', '>=') for line in f
            if line.strip() and not line.startswith('#') and not line.startswith('pytest')
        ]

setup(
    name="hyland",
    version="0.0.1",
    description="Spectral surfaces of constant curvature in hyperbolic space, their landslide flow and its holonomy",
    long_description=open("README.md", "r").read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_dir={'hyland': 'hyland'},
    classifiers=[
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3.10"
    ],
    python_requires=">=3.10",
    install_requires=get_requirements(),
    extras_require={
        'test': ['pytest>=7.3.1']
    },
    entry_points={
        "console_scripts": [
            'hyland = hyland.cli:main'
        ]
    }
)
